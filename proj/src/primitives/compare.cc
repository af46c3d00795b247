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


#include "mpcsdg/primitives/compare.h"

#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"

namespace mpcsdg {

ShareVec LtZero(Party& party, const ShareVec& x) {
  return B2ABit(party, ShiftRightLogical(A2B(party, x), 63));
}

ShareVec Lt(Party& party, const ShareVec& a, const ShareVec& b) {
  party.CountOp("lt", a.size());
  return LtZero(party, Sub(a, b));
}

ShareVec EqZero(Party& party, const ShareVec& x) {
  party.CountOp("eq", x.size());
  // All bits of ~x are one exactly when x == 0.
  BoolVec y = Not(party, A2B(party, x));
  for (int s = 32; s >= 1; s >>= 1) {
    y = And(party, y, ShiftRightLogical(y, s));
  }
  return B2ABit(party, y);
}

ShareVec Eq(Party& party, const ShareVec& a, const ShareVec& b) {
  return EqZero(party, Sub(a, b));
}

ShareVec EqPublic(Party& party, const ShareVec& a, uint64_t c) {
  return EqZero(party, AddPublic(party, a, 0 - c));
}

ShareVec Abs(Party& party, const ShareVec& x) {
  party.CountOp("abs", x.size());
  const ShareVec s = LtZero(party, x);
  return Sub(x, MulPublic(Mul(party, s, x), uint64_t{2}));
}

ShareVec Select(Party& party, const ShareVec& bit, const ShareVec& x,
                const ShareVec& y) {
  return Add(x, Mul(party, bit, Sub(y, x)));
}

ShareVec NotBit(const Party& party, const ShareVec& bit) {
  return AddPublic(party, Neg(bit), uint64_t{1});
}

}  // namespace mpcsdg
