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

// Internal precision of the reciprocal iteration.
inline constexpr int kDivFracBits = 30;
// Precision the reciprocal is cut to before multiplying with the numerator.
inline constexpr int kDivKeepBits = 28;
inline constexpr int kDivNewtonSteps = 5;
// Initial reciprocal estimate 2.9142 - 2x on [0.5, 1).
inline constexpr double kDivInitialOffset = 2.9142;

// Fixed-point a / b. The divisor is normalized into [0.5, 1) by a secret
// power of two found from its most significant bit, inverted with a fixed
// number of Newton steps and scaled back. A final residual check moves the
// quotient one ulp towards floor(a * 2^f / b).
// Requires 0 < b < 2^(30 - f), |a| < 2^(34 - f) and |a / b| < 2^32 in real
// terms.
ShareVec Div(Party& party, const ShareVec& a, const ShareVec& b);

}  // namespace mpcsdg
