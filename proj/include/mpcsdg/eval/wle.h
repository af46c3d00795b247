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

namespace mpcsdg {

// ceil(2^32 / n): public reciprocal used for exact-floor scaling.
uint64_t ReciprocalScale(std::size_t n);

// Workload error between two binned datasets over all 2d + 1 measured
// marginals: (1 / |Q|) * sum_q sum_b |mu_q^b(D) / N - mu_q^b(E) / N_E|.
// Result in f-bit fixed point. Runs under WLE.
ShareVec WorkloadError(Party& party, const ShareMatrix& real,
                       const ShareMatrix& synthetic);

}  // namespace mpcsdg
