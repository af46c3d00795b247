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

// Secret bits are arithmetic shares of the integers 0 and 1.

// 1 where x < 0 (sign bit). Ten rounds.
ShareVec LtZero(Party& party, const ShareVec& x);
// 1 where a < b, signed. Requires |a - b| < 2^63.
ShareVec Lt(Party& party, const ShareVec& a, const ShareVec& b);
// 1 where x == 0. Sixteen rounds.
ShareVec EqZero(Party& party, const ShareVec& x);
ShareVec Eq(Party& party, const ShareVec& a, const ShareVec& b);
ShareVec EqPublic(Party& party, const ShareVec& a, uint64_t c);
// |x| = x - 2 * lt(x, 0) * x.
ShareVec Abs(Party& party, const ShareVec& x);
// bit ? y : x, exact for any ring values.
ShareVec Select(Party& party, const ShareVec& bit, const ShareVec& x,
                const ShareVec& y);
// 1 - bit.
ShareVec NotBit(const Party& party, const ShareVec& bit);

}  // namespace mpcsdg
