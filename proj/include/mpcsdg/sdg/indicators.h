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

#include <array>
#include <cstdint>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

inline constexpr int kLabelClasses = 5;

// I_b(x) = numerator_b(x) / divisor_b on x in {0, 1, 2, 3}:
//   I_0 = (1-x)(2-x)(3-x) / 6      I_1 = x(2-x)(3-x) / 2
//   I_2 = x(1-x)(3-x) / -2         I_3 = x(1-x)(2-x) / 6
inline constexpr std::array<int64_t, 4> kGeneIndicatorDivisors = {6, 2, -2, 6};
// I'_f(y) = prod_{k != f} (y - k) / prod_{k != f} (f - k) on y in {0..4}.
inline constexpr std::array<int64_t, 5> kLabelIndicatorDivisors = {24, -6, 4,
                                                                   -6, 24};

struct IndicatorNumerators {
  // [i * 4 + b] and [i * 5 + f], exact integers.
  ShareVec gene;
  ShareVec label;
};

// Integer numerators of all gene and label indicators, sharing factor terms.
// Two rounds for both inputs together.
IndicatorNumerators ComputeIndicatorNumerators(Party& party,
                                               const ShareVec& genes,
                                               const ShareVec& labels);

// Fixed-point indicator values (one encodes as 2^f). Layout [i * 4 + b].
ShareVec Indicator4(Party& party, const ShareVec& x);
// Layout [i * 5 + f].
ShareVec Indicator5(Party& party, const ShareVec& y);

}  // namespace mpcsdg
