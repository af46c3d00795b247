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


#include "mpcsdg/primitives/divide.h"

#include <cmath>

#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"

namespace mpcsdg {

namespace {

ShareVec MulTrunc(Party& party, const ShareVec& x, const ShareVec& y, int s) {
  return Trunc(party, Mul(party, x, y), s);
}

}  // namespace

ShareVec Div(Party& party, const ShareVec& a, const ShareVec& b) {
  if (a.size() != b.size()) throw ParameterError("div size mismatch");
  party.CountOp("div", a.size());
  const int f = party.frac_bits();
  constexpr int F = kDivFracBits;

  // One-hot of the most significant set bit of b.
  BoolVec y = A2B(party, b);
  for (int s = 1; s < 64; s <<= 1) {
    y = Not(party, And(party, Not(party, y),
                       Not(party, ShiftRightLogical(y, s))));
  }
  const BoolVec msb = Xor(y, ShiftRightLogical(y, 1));
  // Bit k moves to position F-1-k, so b * scale lies in [2^(F-1), 2^F).
  const ShareVec scale =
      B2A(party, ShiftRightLogical(BitReverse(msb), 64 - F));
  const ShareVec bn = Mul(party, b, scale);

  const uint64_t offset = static_cast<uint64_t>(
      std::llround(std::ldexp(kDivInitialOffset, F)));
  ShareVec x = AddPublic(party, MulPublic(bn, 0 - uint64_t{2}), offset);
  const uint64_t two = uint64_t{1} << (F + 1);
  for (int step = 0; step < kDivNewtonSteps; ++step) {
    const ShareVec t = MulTrunc(party, bn, x, F);
    const ShareVec e = AddPublic(party, Neg(t), two);
    x = MulTrunc(party, x, e, F);
  }
  const ShareVec xg = Trunc(party, x, F - kDivKeepBits);
  const ShareVec q0 = MulTrunc(
      party, MulTrunc(party, a, xg, kDivKeepBits), scale, F - f);

  // Residual r = a * 2^f - q0 * b; step q0 by one towards floor(a * 2^f / b).
  const ShareVec r =
      Sub(MulPublic(a, party.fp().One()), Mul(party, q0, b));
  ShareVec probe = Sub(r, b);
  probe.Append(r);
  const ShareVec neg = LtZero(party, probe);
  const std::size_t n = a.size();
  return AddPublic(party, Sub(q0, Add(neg.Slice(0, n), neg.Slice(n, n))), 1);
}

}  // namespace mpcsdg
