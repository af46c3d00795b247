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


#include "mpcsdg/primitives/sort.h"

#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/rss/arith.h"

namespace mpcsdg {

std::vector<ShareVec> SortColumns(Party& party,
                                  const std::vector<ShareVec>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns[0].size();
  for (const auto& c : columns) {
    if (c.size() != n) throw ParameterError("sort columns differ in length");
  }
  Party::Scope scope(party, Label::kSort);
  party.CountOp("sort", n * columns.size());
  std::size_t p = 1;
  while (p < n) p <<= 1;

  std::vector<ShareVec> v;
  for (const auto& c : columns) {
    ShareVec padded = c;
    padded.Append(PublicShare(party, Words(p - n, kSortSentinel)));
    v.push_back(std::move(padded));
  }

  for (std::size_t k = 2; k <= p; k <<= 1) {
    for (std::size_t j = k >> 1; j > 0; j >>= 1) {
      // (low, high) pairs: after the swap v[low] <= v[high].
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < p; ++i) {
        const std::size_t l = i ^ j;
        if (l <= i) continue;
        if ((i & k) == 0) {
          pairs.emplace_back(i, l);
        } else {
          pairs.emplace_back(l, i);
        }
      }
      const std::size_t m = pairs.size();
      ShareVec lo(m * v.size()), hi(m * v.size());
      for (std::size_t c = 0; c < v.size(); ++c) {
        for (std::size_t t = 0; t < m; ++t) {
          const std::size_t o = c * m + t;
          lo.a[o] = v[c].a[pairs[t].first];
          lo.b[o] = v[c].b[pairs[t].first];
          hi.a[o] = v[c].a[pairs[t].second];
          hi.b[o] = v[c].b[pairs[t].second];
        }
      }
      const ShareVec swap = Lt(party, hi, lo);
      const ShareVec d = Mul(party, swap, Sub(hi, lo));
      for (std::size_t c = 0; c < v.size(); ++c) {
        for (std::size_t t = 0; t < m; ++t) {
          const std::size_t o = c * m + t;
          v[c].a[pairs[t].first] += d.a[o];
          v[c].b[pairs[t].first] += d.b[o];
          v[c].a[pairs[t].second] -= d.a[o];
          v[c].b[pairs[t].second] -= d.b[o];
        }
      }
    }
  }
  for (auto& c : v) c = c.Slice(0, n);
  return v;
}

ShareVec Sort(Party& party, const ShareVec& v) {
  return SortColumns(party, {v})[0];
}

}  // namespace mpcsdg
