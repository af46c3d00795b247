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


#include "mpcsdg/preprocess/binning.h"

#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/primitives/divide.h"
#include "mpcsdg/primitives/sort.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"

namespace mpcsdg {

QuantilePosition QuantilePos(std::size_t n, int r) {
  const std::size_t scaled = (n - 1) * static_cast<std::size_t>(r + 1);
  return {scaled / 4, static_cast<int>(scaled % 4)};
}

QuantileCuts ComputeQuantiles(Party& party, const ShareMatrix& genes) {
  const std::size_t n = genes.rows;
  const std::size_t d = genes.cols;
  if (n < 2) throw ParameterError("quantiles need at least two rows");
  std::vector<ShareVec> cols;
  for (std::size_t g = 0; g < d; ++g) cols.push_back(genes.Column(g));
  const std::vector<ShareVec> sorted = SortColumns(party, cols);

  // Q = D[lo] + floor((D[lo+1] - D[lo]) * quarters / 4).
  ShareVec base(d * kNumCuts), diff(d * kNumCuts);
  Words quarters(d * kNumCuts);
  for (std::size_t g = 0; g < d; ++g) {
    for (int r = 0; r < kNumCuts; ++r) {
      const QuantilePosition pos = QuantilePos(n, r);
      const std::size_t o = g * kNumCuts + r;
      base.a[o] = sorted[g].a[pos.lo];
      base.b[o] = sorted[g].b[pos.lo];
      diff.a[o] = sorted[g].a[pos.lo + 1] - sorted[g].a[pos.lo];
      diff.b[o] = sorted[g].b[pos.lo + 1] - sorted[g].b[pos.lo];
      quarters[o] = static_cast<uint64_t>(pos.quarters);
    }
  }
  QuantileCuts cuts;
  cuts.genes = d;
  cuts.q = Add(base, Trunc(party, MulPublic(diff, quarters), 2));
  return cuts;
}

ShareMatrix BinColumns(Party& party, const ShareMatrix& genes,
                       const QuantileCuts& cuts) {
  const std::size_t n = genes.rows;
  const std::size_t d = genes.cols;
  if (cuts.genes != d) throw ParameterError("cuts do not match gene count");
  ShareVec x(n * d * kNumCuts), q(n * d * kNumCuts);
  for (std::size_t cell = 0; cell < n * d; ++cell) {
    const std::size_t g = cell % d;
    for (int r = 0; r < kNumCuts; ++r) {
      const std::size_t o = cell * kNumCuts + r;
      x.a[o] = genes.cells.a[cell];
      x.b[o] = genes.cells.b[cell];
      q.a[o] = cuts.q.a[g * kNumCuts + r];
      q.b[o] = cuts.q.b[g * kNumCuts + r];
    }
  }
  const ShareVec below = Lt(party, x, q);
  ShareMatrix out(n, d);
  for (std::size_t cell = 0; cell < n * d; ++cell) {
    uint64_t sa = 0, sb = 0;
    for (int r = 0; r < kNumCuts; ++r) {
      sa += below.a[cell * kNumCuts + r];
      sb += below.b[cell * kNumCuts + r];
    }
    out.cells.a[cell] = 0 - sa;
    out.cells.b[cell] = 0 - sb;
  }
  out.cells = AddPublic(party, out.cells, uint64_t{kNumCuts});
  return out;
}

BinMeans ComputeBinMeans(Party& party, const ShareMatrix& binned_genes,
                         const ShareMatrix& genes, const QuantileCuts& cuts) {
  const std::size_t n = genes.rows;
  const std::size_t d = genes.cols;
  const std::size_t m = d * kGeneBins;

  // Indicator of bin b for every cell, laid out [g][b][row].
  ShareVec shifted(m * n), values(m * n);
  Words offsets(m * n);
  for (std::size_t g = 0; g < d; ++g) {
    for (int b = 0; b < kGeneBins; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t o = (g * kGeneBins + b) * n + i;
        shifted.a[o] = binned_genes.cells.a[i * d + g];
        shifted.b[o] = binned_genes.cells.b[i * d + g];
        values.a[o] = genes.cells.a[i * d + g];
        values.b[o] = genes.cells.b[i * d + g];
        offsets[o] = 0 - static_cast<uint64_t>(b);
      }
    }
  }
  const ShareVec member = EqZero(party, AddPublic(party, shifted, offsets));
  const ShareVec sums = InnerProducts(party, member, values, n);
  ShareVec counts(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      counts.a[k] += member.a[k * n + i];
      counts.b[k] += member.b[k * n + i];
    }
  }

  // Empty bins divide by one instead of zero and are replaced afterwards.
  const ShareVec empty = EqZero(party, counts);
  const ShareVec divisor =
      MulPublic(Add(counts, empty), party.fp().One());
  const ShareVec mean = Div(party, sums, divisor);

  ShareVec pair_sums(2 * d);
  for (std::size_t g = 0; g < d; ++g) {
    for (int k = 0; k < 2; ++k) {
      pair_sums.a[2 * g + k] =
          cuts.q.a[g * kNumCuts + k] + cuts.q.a[g * kNumCuts + k + 1];
      pair_sums.b[2 * g + k] =
          cuts.q.b[g * kNumCuts + k] + cuts.q.b[g * kNumCuts + k + 1];
    }
  }
  const ShareVec mids = Trunc(party, pair_sums, 1);
  ShareVec fallback(m);
  for (std::size_t g = 0; g < d; ++g) {
    const std::size_t o = g * kGeneBins;
    fallback.a[o] = cuts.q.a[g * kNumCuts];
    fallback.b[o] = cuts.q.b[g * kNumCuts];
    fallback.a[o + 1] = mids.a[2 * g];
    fallback.b[o + 1] = mids.b[2 * g];
    fallback.a[o + 2] = mids.a[2 * g + 1];
    fallback.b[o + 2] = mids.b[2 * g + 1];
    fallback.a[o + 3] = cuts.q.a[g * kNumCuts + 2];
    fallback.b[o + 3] = cuts.q.b[g * kNumCuts + 2];
  }
  BinMeans out;
  out.genes = d;
  out.means = Select(party, empty, mean, fallback);
  out.counts = std::move(counts);
  return out;
}

BinningResult Bin(Party& party, const ShareMatrix& data, bool means_needed) {
  if (data.cols < 1) throw ParameterError("dataset has no label column");
  Party::Scope scope(party, Label::kBin);
  const std::size_t d = data.cols - 1;
  const ShareMatrix genes = data.Columns(0, d);
  BinningResult result;
  result.cuts = ComputeQuantiles(party, genes);
  const ShareMatrix binned = BinColumns(party, genes, result.cuts);
  if (means_needed) {
    result.means = ComputeBinMeans(party, binned, genes, result.cuts);
  }
  result.binned = data;
  for (std::size_t g = 0; g < d; ++g) {
    result.binned.SetColumn(g, binned.Column(g));
  }
  return result;
}

ShareMatrix BinTest(Party& party, const ShareMatrix& data,
                    const QuantileCuts& cuts) {
  if (data.cols < 1) throw ParameterError("dataset has no label column");
  Party::Scope scope(party, Label::kBinTest);
  const std::size_t d = data.cols - 1;
  const ShareMatrix binned = BinColumns(party, data.Columns(0, d), cuts);
  ShareMatrix out = data;
  for (std::size_t g = 0; g < d; ++g) out.SetColumn(g, binned.Column(g));
  return out;
}

ShareMatrix InvBin(Party& party, const ShareMatrix& binned,
                   const BinMeans& means) {
  if (binned.cols < 1) throw ParameterError("dataset has no label column");
  Party::Scope scope(party, Label::kInvBin);
  const std::size_t n = binned.rows;
  const std::size_t d = binned.cols - 1;
  if (means.genes != d) throw ParameterError("means do not match gene count");
  ShareVec shifted(n * d * kGeneBins), selected(n * d * kGeneBins);
  Words offsets(n * d * kGeneBins);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < d; ++g) {
      for (int b = 0; b < kGeneBins; ++b) {
        const std::size_t o = (i * d + g) * kGeneBins + b;
        shifted.a[o] = binned.cells.a[i * binned.cols + g];
        shifted.b[o] = binned.cells.b[i * binned.cols + g];
        selected.a[o] = means.means.a[g * kGeneBins + b];
        selected.b[o] = means.means.b[g * kGeneBins + b];
        offsets[o] = 0 - static_cast<uint64_t>(b);
      }
    }
  }
  const ShareVec member = EqZero(party, AddPublic(party, shifted, offsets));
  party.CountOp("mul", member.size());
  const ShareVec values = InnerProducts(party, member, selected, kGeneBins);
  ShareMatrix out = binned;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < d; ++g) {
      out.cells.a[i * binned.cols + g] = values.a[i * d + g];
      out.cells.b[i * binned.cols + g] = values.b[i * d + g];
    }
  }
  return out;
}

}  // namespace mpcsdg
