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

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

inline constexpr int kLrClasses = 5;
// Inputs below this are clamped before the exponential approximation.
inline constexpr double kExpClamp = -8.0;
// exp(x) on [-8, 0] as a degree-5 polynomial in x (least squares fit).
inline constexpr std::array<double, 6> kExpCoefficients = {
    0.992373966, 0.922762264, 0.366347469,
    0.0740245643, 0.00739896788, 0.000288885912};

struct LrOptions {
  int epochs = 150;
  double learning_rate = 0.05;
};

// Weights (d + 1) x 5, row-major; the last row is the bias.
struct LrModel {
  std::size_t inputs = 0;
  ShareVec weights;
};

// Integer design matrix n x (d + 1): binned genes then a constant 1.
ShareVec DesignMatrix(const Party& party, const ShareMatrix& binned);
// One-hot labels n x 5 in f-bit fixed point.
ShareVec OneHotLabels(Party& party, const ShareMatrix& binned);

struct ArgMaxResult {
  ShareVec max;    // per row
  ShareVec index;  // integer class index; ties go to the lowest index
};
// Row-wise maximum of an (n x k) matrix by a pairwise tournament.
ArgMaxResult ArgMax(Party& party, const ShareVec& scores, std::size_t k);

// exp(z - max_row) approximation per row of an (n x 5) score matrix.
ShareVec ShiftedExp(Party& party, const ShareVec& scores, std::size_t n);
// Softmax probabilities per row.
ShareVec Softmax(Party& party, const ShareVec& scores, std::size_t n);

// X^T (softmax(X W) - Y): gradient of the summed cross-entropy, f bits.
ShareVec Gradient(Party& party, const ShareVec& design, const ShareVec& onehot,
                  const ShareVec& weights, std::size_t n, std::size_t inputs);

// Full-batch gradient descent from zero weights. Runs under LR.
LrModel TrainLogReg(Party& party, const ShareMatrix& binned,
                    const LrOptions& options);

// Secret fraction of rows whose argmax class equals the label, f bits.
// Runs under LR. Throws ParameterError for an empty test set.
ShareVec LrAccuracy(Party& party, const LrModel& model,
                    const ShareMatrix& binned_test);

}  // namespace mpcsdg
