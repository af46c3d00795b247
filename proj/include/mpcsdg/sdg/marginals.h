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

#include <cstddef>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

inline constexpr int kJointCells = 4 * 5;

// Secret marginals of a binned dataset. Values carry `scale_bits`
// fractional bits: f for exact counts, 2f once noise has been added.
struct MarginalSet {
  std::size_t genes = 0;
  int scale_bits = 0;
  ShareVec gene;   // [g * 4 + b]
  ShareVec label;  // [f]
  ShareVec joint;  // [g * 20 + r * 5 + f]

  std::size_t size() const { return gene.size() + label.size() + joint.size(); }
  // gene, label, joint concatenated.
  ShareVec Flatten() const;
  static MarginalSet Unflatten(const ShareVec& v, std::size_t genes,
                               int scale_bits);
};

// 1-way gene marginals, the label marginal and the gene x label 2-way
// marginals: 2d + 1 measurements.
inline std::size_t MeasurementCount(std::size_t genes) { return 2 * genes + 1; }

struct NoiseCalibration {
  double epsilon_q = 0;
  double delta_q = 0;
  double sigma = 0;
  std::size_t measurements = 0;
};

// Uniform split of (epsilon, delta) over the measurements and the Gaussian
// mechanism scale sqrt(2 ln(1.25 / delta_q)) / epsilon_q at sensitivity 1.
// Throws ParameterError unless epsilon > 0, 0 < delta < 1, count >= 1.
NoiseCalibration Calibrate(double epsilon, double delta,
                           std::size_t measurements);

// Exact counts (f-bit fixed point) of a binned matrix whose last column is
// the label. Two multiplication rounds plus one inner-product round.
MarginalSet ExactMarginals(Party& party, const ShareMatrix& binned);

// Exact counts plus sigma * N(0,1) noise on every cell, at 2f fractional
// bits. Runs under NOISY-MARG.
MarginalSet NoisyMarginals(Party& party, const ShareMatrix& binned,
                           double sigma);

}  // namespace mpcsdg
