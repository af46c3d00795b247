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
#include <optional>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

inline constexpr int kGeneBins = 4;
inline constexpr int kNumCuts = 3;

// Interpolation point for the r-th cut (r = 0, 1, 2 for 0.25, 0.5, 0.75):
// pos = (n - 1) * (r + 1) / 4 = lo + quarters / 4.
struct QuantilePosition {
  std::size_t lo = 0;
  int quarters = 0;
};
QuantilePosition QuantilePos(std::size_t n, int r);

// Three secret cut points per gene, at index g * 3 + r.
struct QuantileCuts {
  std::size_t genes = 0;
  ShareVec q;
};

// Per gene and bin (index g * 4 + b): the de-binning value and the count.
struct BinMeans {
  std::size_t genes = 0;
  ShareVec means;
  ShareVec counts;
};

struct BinningResult {
  // Binned genes followed by the untouched label column.
  ShareMatrix binned;
  QuantileCuts cuts;
  std::optional<BinMeans> means;
};

// Sorts every column of an (n x d) fixed-point gene matrix and interpolates
// the quartile cut points. Throws ParameterError when n < 2.
QuantileCuts ComputeQuantiles(Party& party, const ShareMatrix& genes);

// bin = 3 - [x < Q0] - [x < Q1] - [x < Q2], as integers.
ShareMatrix BinColumns(Party& party, const ShareMatrix& genes,
                       const QuantileCuts& cuts);

// Mean of the raw values in each bin. Empty bins take the midpoint of the
// adjacent cuts (Q0 for bin 0, Q2 for bin 3), chosen obliviously.
BinMeans ComputeBinMeans(Party& party, const ShareMatrix& binned_genes,
                         const ShareMatrix& genes, const QuantileCuts& cuts);

// Full binning of a dataset whose last column is the label. Runs under BIN.
BinningResult Bin(Party& party, const ShareMatrix& data, bool means_needed);

// Bins held-out rows with cuts from training data: no sort, no means.
// Runs under BIN-TEST.
ShareMatrix BinTest(Party& party, const ShareMatrix& data,
                    const QuantileCuts& cuts);

// Replaces each binned gene cell by its bin's mean. Cells outside {0..3}
// become 0. The label column is kept. Runs under INV-BIN.
ShareMatrix InvBin(Party& party, const ShareMatrix& binned,
                   const BinMeans& means);

}  // namespace mpcsdg
