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
#include <vector>

namespace mpcsdg {

// Rows of bin indices: d gene cells in {0..3} followed by the label in
// {0..4}.
struct BinnedTable {
  std::size_t rows = 0;
  std::size_t genes = 0;
  std::vector<int> cells;  // row-major, genes + 1 per row

  int at(std::size_t r, std::size_t c) const {
    return cells[r * (genes + 1) + c];
  }
};

// Opened (noisy) marginals in real units.
struct ClearMarginals {
  std::size_t genes = 0;
  std::vector<double> gene;   // [g * 4 + b]
  std::vector<double> label;  // [f]
  std::vector<double> joint;  // [g * 20 + r * 5 + f]
};

using JointTable = std::array<double, 20>;

struct FittedModel {
  std::array<double, 5> label;     // target label counts after clipping
  std::vector<std::array<double, 4>> gene;  // target gene counts
  std::vector<JointTable> joint;   // fitted gene x label tables
};

// Clips negatives, rescales every marginal to the clipped label total and
// runs `iterations` proportional-fitting passes (rows to the gene marginal,
// then columns to the label marginal) per gene.
FittedModel FitModel(const ClearMarginals& m, int iterations);

// Samples y from the label marginal, then each gene from its fitted table
// conditioned on y. Deterministic in `seed`.
BinnedTable SampleRows(const FittedModel& model, std::size_t n_out,
                       uint64_t seed);

BinnedTable GenerateSynthetic(const ClearMarginals& m, std::size_t n_out,
                              int iterations, uint64_t seed);

}  // namespace mpcsdg
