// Copyright 2026 The mpcsdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"
#include "mpcsdg/sdg/generator.h"
#include "mpcsdg/sdg/marginals.h"

namespace mpcsdg {

// Party hosting the generator enclave (displayed as party 1).
inline constexpr int kEnclaveParty = 0;

// Decodes opened marginal words (gene, label, joint concatenated).
ClearMarginals DecodeMarginals(const Words& opened, std::size_t genes,
                               int scale_bits);

struct GeneratorRequest {
  std::size_t n_out = 0;
  int iterations = 0;
  uint64_t seed = 0;
};

// Reveals the noisy marginals to the enclave party only, generates binned
// synthetic rows there in the clear and secret-shares them back. Runs under
// SDG. Returns an (n_out x (d + 1)) integer matrix.
ShareMatrix SecureGenerate(Party& party, const MarginalSet& noisy,
                           const GeneratorRequest& request);

}  // namespace mpcsdg
