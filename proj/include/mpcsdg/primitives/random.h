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

#include <vector>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

// Secret fixed-point values uniform on the 2^-f grid of [0, 1): f random
// bits per sample, each party contributing its pairwise noise streams and
// the bits combined by XOR inside the sharing.
ShareVec RandUniform01(Party& party, std::size_t n);

// Approximate N(0, 1) samples: the sum of twelve uniforms minus 6, in f-bit
// fixed point. Runs under the GAUSS label.
ShareVec Gauss01(Party& party, std::size_t n);

// Mean of K secret vectors, computed locally as the sum times
// round(2^f / K). The result carries 2f fractional bits.
ShareVec Avg(const Party& party, const std::vector<ShareVec>& values);

namespace internal {

// Irwin-Hall step of Gauss01 on caller-provided uniforms. Uniform j of
// sample i is at index j * n + i.
ShareVec GaussFromUniforms(const Party& party, const ShareVec& uniforms,
                           std::size_t n);

}  // namespace internal

}  // namespace mpcsdg
