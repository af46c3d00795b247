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


#include "mpcsdg/sdg/indicators.h"

#include "mpcsdg/rss/arith.h"

namespace mpcsdg {

IndicatorNumerators ComputeIndicatorNumerators(Party& party,
                                               const ShareVec& genes,
                                               const ShareVec& labels) {
  const std::size_t n = genes.size();
  const std::size_t m = labels.size();
  auto offset = [&](const ShareVec& v, int k) {
    return AddPublic(party, v, 0 - static_cast<uint64_t>(k));
  };
  // Gene factors: x, a = 1-x, b = 2-x, c = 3-x.
  const ShareVec& x = genes;
  const ShareVec a = Neg(offset(x, 1));
  const ShareVec b = Neg(offset(x, 2));
  const ShareVec c = Neg(offset(x, 3));
  // Label factors s_k = y - k.
  std::array<ShareVec, kLabelClasses> s;
  for (int k = 0; k < kLabelClasses; ++k) s[k] = offset(labels, k);

  // Round one: bc, xa | s1s2, s3s4, s0s1, s0s2, s2s3, s2s4.
  ShareVec lhs = b, rhs = c;
  lhs.Append(x);
  rhs.Append(a);
  const std::array<std::pair<int, int>, 6> label_pairs = {
      {{1, 2}, {3, 4}, {0, 1}, {0, 2}, {2, 3}, {2, 4}}};
  for (const auto& [p, q] : label_pairs) {
    lhs.Append(s[p]);
    rhs.Append(s[q]);
  }
  const ShareVec r1 = Mul(party, lhs, rhs);
  const ShareVec bc = r1.Slice(0, n);
  const ShareVec xa = r1.Slice(n, n);
  auto lp = [&](int k) { return r1.Slice(2 * n + k * m, m); };
  const ShareVec p12 = lp(0), p34 = lp(1), p01 = lp(2), p02 = lp(3),
                 p23 = lp(4), p24 = lp(5);

  // Round two: a*bc, x*bc, xa*c, xa*b | p12p34, p02p34, p01p34, p01p24,
  // p01p23.
  lhs = a;
  rhs = bc;
  lhs.Append(x);
  rhs.Append(bc);
  lhs.Append(xa);
  rhs.Append(c);
  lhs.Append(xa);
  rhs.Append(b);
  for (const auto& [p, q] : std::array<std::pair<const ShareVec*, const ShareVec*>, 5>{
           {{&p12, &p34}, {&p02, &p34}, {&p01, &p34}, {&p01, &p24},
            {&p01, &p23}}}) {
    lhs.Append(*p);
    rhs.Append(*q);
  }
  const ShareVec r2 = Mul(party, lhs, rhs);

  IndicatorNumerators out;
  out.gene = ShareVec(4 * n);
  for (int k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      out.gene.a[i * 4 + k] = r2.a[k * n + i];
      out.gene.b[i * 4 + k] = r2.b[k * n + i];
    }
  }
  out.label = ShareVec(kLabelClasses * m);
  for (int k = 0; k < kLabelClasses; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      out.label.a[i * kLabelClasses + k] = r2.a[4 * n + k * m + i];
      out.label.b[i * kLabelClasses + k] = r2.b[4 * n + k * m + i];
    }
  }
  return out;
}

namespace {

template <std::size_t K>
ShareVec Scale(const ShareVec& num, const std::array<int64_t, K>& divisors,
               int frac_bits) {
  Words c(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    c[i] = ExactDivisionConstant(divisors[i % K], frac_bits);
  }
  return MulPublic(num, c);
}

}  // namespace

ShareVec Indicator4(Party& party, const ShareVec& x) {
  const auto num = ComputeIndicatorNumerators(party, x, ShareVec());
  return Scale(num.gene, kGeneIndicatorDivisors, party.frac_bits());
}

ShareVec Indicator5(Party& party, const ShareVec& y) {
  const auto num = ComputeIndicatorNumerators(party, ShareVec(), y);
  return Scale(num.label, kLabelIndicatorDivisors, party.frac_bits());
}

}  // namespace mpcsdg
