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

// Cleartext reference implementations. They use the same fixed-point grid
// as the secure path so results can be compared exactly.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpcsdg/io/dataset_file.h"
#include "mpcsdg/pipeline/config.h"
#include "mpcsdg/ring/fixed_point.h"
#include "mpcsdg/runtime/prg.h"
#include "mpcsdg/sdg/generator.h"

namespace mpcsdg::oracle {

// floor(v / 2^s) on the signed view, as a ring word.
uint64_t FloorShift(uint64_t v, int s);
bool SignedLess(uint64_t a, uint64_t b);

// Integer mirror of the secure reciprocal. Same preconditions.
uint64_t ClearDiv(uint64_t a, uint64_t b, int frac_bits);

// Column-major gene words of a row-major dataset: [g][row].
std::vector<Words> GeneColumns(const ClearDataset& data,
                               const FixedPointConfig& fp);

// Quartile cuts per gene by sorting and interpolating at (n-1)(r+1)/4.
std::vector<std::array<uint64_t, 3>> ClearCuts(const std::vector<Words>& cols);
// Number of cuts that x is not below.
int ClearBinIndex(uint64_t x, const std::array<uint64_t, 3>& cuts);

struct ClearBinning {
  std::vector<std::array<uint64_t, 3>> cuts;
  BinnedTable table;
  // [g][b] fixed-point means with the midpoint fallback for empty bins.
  std::vector<std::array<uint64_t, 4>> means;
  std::vector<std::array<int64_t, 4>> counts;
};
ClearBinning ClearBin(const ClearDataset& data, const FixedPointConfig& fp,
                      bool with_means);
BinnedTable ClearBinWithCuts(const ClearDataset& data,
                             const std::vector<std::array<uint64_t, 3>>& cuts,
                             const FixedPointConfig& fp);

// Float-domain means of the values in each bin, for tolerance checks.
std::vector<std::array<double, 4>> FloatBinMeans(const ClearDataset& data,
                                                 const BinnedTable& table);

// Counts by direct enumeration: gene [g*4+b], label [f], joint
// [g*20 + r*5 + f].
struct Counts {
  std::vector<int64_t> gene;
  std::array<int64_t, 5> label{};
  std::vector<int64_t> joint;
  std::vector<int64_t> Flatten() const;
};
Counts BruteMarginals(const BinnedTable& table);

// The three pair keys a seed-pinned run installs.
std::array<Seed, 3> PairKeys(uint64_t master_seed);
// Irwin-Hall samples (f fractional bits) drawn from the noise streams after
// a reseed at context (a, b).
Words ClearGauss(const std::array<Seed, 3>& keys, uint64_t a, uint64_t b,
                 std::size_t n, int frac_bits);
// counts * 2^2f + Encode(sigma) * gauss, as ring words.
Words ClearNoisyMarginals(const Counts& counts, const Words& gauss,
                          double sigma, const FixedPointConfig& fp);

// Workload error at f fractional bits.
uint64_t ClearWle(const BinnedTable& real, const BinnedTable& synthetic,
                  int frac_bits);

struct ClearLrModel {
  std::size_t inputs = 0;
  Words weights;  // [inputs][5], f bits
};
ClearLrModel ClearTrainLr(const BinnedTable& train, int epochs,
                          double learning_rate, int frac_bits);
std::vector<int> ClearPredict(const ClearLrModel& model,
                              const BinnedTable& data);
uint64_t ClearAccuracy(const ClearLrModel& model, const BinnedTable& test,
                       int frac_bits);

struct ClearPipelineResult {
  bool publish = false;
  int loops = 0;
  std::optional<int> chosen_index;
  std::vector<uint64_t> vote_bits;
  // Averaged metrics per loop at 2f bits.
  std::vector<uint64_t> wle;
  std::vector<uint64_t> accuracy;
  std::optional<ClearDataset> synthetic;
};
ClearPipelineResult ClearPipeline(const std::vector<ClearDataset>& datasets,
                                  const std::vector<Thresholds>& thresholds,
                                  const PipelineConfig& config);

}  // namespace mpcsdg::oracle
