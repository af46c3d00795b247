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


#include "mpcsdg/eval/logreg.h"

#include <cmath>

#include "mpcsdg/errors.h"
#include "mpcsdg/eval/wle.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/primitives/divide.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"
#include "mpcsdg/sdg/indicators.h"

namespace mpcsdg {

ShareVec DesignMatrix(const Party& party, const ShareMatrix& binned) {
  const std::size_t n = binned.rows;
  const std::size_t d = binned.cols - 1;
  ShareVec x(n * (d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < d; ++g) {
      x.a[i * (d + 1) + g] = binned.cells.a[i * binned.cols + g];
      x.b[i * (d + 1) + g] = binned.cells.b[i * binned.cols + g];
    }
  }
  Words bias(n * (d + 1), 0);
  for (std::size_t i = 0; i < n; ++i) bias[i * (d + 1) + d] = 1;
  return AddPublic(party, x, bias);
}

ShareVec OneHotLabels(Party& party, const ShareMatrix& binned) {
  return Indicator5(party, binned.Column(binned.cols - 1));
}

ArgMaxResult ArgMax(Party& party, const ShareVec& scores, std::size_t k) {
  if (k == 0 || scores.size() % k != 0) {
    throw ParameterError("score matrix shape mismatch");
  }
  const std::size_t n = scores.size() / k;
  // Candidates per row, kept in class order so ties resolve to the left.
  std::vector<ShareVec> val, idx;
  for (std::size_t c = 0; c < k; ++c) {
    ShareVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v.a[i] = scores.a[i * k + c];
      v.b[i] = scores.b[i * k + c];
    }
    val.push_back(std::move(v));
    idx.push_back(PublicShare(party, Words(n, c)));
  }
  while (val.size() > 1) {
    const std::size_t pairs = val.size() / 2;
    ShareVec left, right, left_idx, right_idx;
    for (std::size_t p = 0; p < pairs; ++p) {
      left.Append(val[2 * p]);
      right.Append(val[2 * p + 1]);
      left_idx.Append(idx[2 * p]);
      right_idx.Append(idx[2 * p + 1]);
    }
    const ShareVec right_wins = Lt(party, left, right);
    ShareVec bits = right_wins;
    bits.Append(right_wins);
    ShareVec deltas = Sub(right, left);
    deltas.Append(Sub(right_idx, left_idx));
    const ShareVec moved = Mul(party, bits, deltas);
    const std::size_t m = pairs * n;
    const ShareVec new_val = Add(left, moved.Slice(0, m));
    const ShareVec new_idx = Add(left_idx, moved.Slice(m, m));
    std::vector<ShareVec> next_val, next_idx;
    for (std::size_t p = 0; p < pairs; ++p) {
      next_val.push_back(new_val.Slice(p * n, n));
      next_idx.push_back(new_idx.Slice(p * n, n));
    }
    if (val.size() % 2 == 1) {
      next_val.push_back(val.back());
      next_idx.push_back(idx.back());
    }
    val = std::move(next_val);
    idx = std::move(next_idx);
  }
  return {val[0], idx[0]};
}

ShareVec ShiftedExp(Party& party, const ShareVec& scores, std::size_t n) {
  const int f = party.frac_bits();
  const ShareVec max = ArgMax(party, scores, kLrClasses).max;
  ShareVec z(n * kLrClasses);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < kLrClasses; ++c) {
      z.a[i * kLrClasses + c] = scores.a[i * kLrClasses + c] - max.a[i];
      z.b[i * kLrClasses + c] = scores.b[i * kLrClasses + c] - max.b[i];
    }
  }
  const uint64_t floor = Encode(kExpClamp, party.fp()).word;
  const ShareVec low = PublicShare(party, Words(z.size(), floor));
  z = Select(party, Lt(party, z, low), z, low);
  // t = z / 8 in [-1, 0]; p(t) = sum_k c_k 8^k t^k by Horner.
  const ShareVec t = Trunc(party, z, 3);
  const int degree = static_cast<int>(kExpCoefficients.size()) - 1;
  auto coeff = [&](int k) {
    return Encode(kExpCoefficients[k] * std::ldexp(1.0, 3 * k), party.fp())
        .word;
  };
  ShareVec acc = PublicShare(party, Words(z.size(), coeff(degree)));
  for (int k = degree - 1; k >= 0; --k) {
    acc = AddPublic(party, Trunc(party, Mul(party, acc, t), f), coeff(k));
  }
  return acc;
}

ShareVec Softmax(Party& party, const ShareVec& scores, std::size_t n) {
  const ShareVec e = ShiftedExp(party, scores, n);
  ShareVec sums(n * kLrClasses);
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t sa = 0, sb = 0;
    for (int c = 0; c < kLrClasses; ++c) {
      sa += e.a[i * kLrClasses + c];
      sb += e.b[i * kLrClasses + c];
    }
    for (int c = 0; c < kLrClasses; ++c) {
      sums.a[i * kLrClasses + c] = sa;
      sums.b[i * kLrClasses + c] = sb;
    }
  }
  return Div(party, e, sums);
}

ShareVec Gradient(Party& party, const ShareVec& design, const ShareVec& onehot,
                  const ShareVec& weights, std::size_t n, std::size_t inputs) {
  const ShareVec scores =
      MatMul(party, design, weights, n, inputs, kLrClasses);
  const ShareVec err = Sub(Softmax(party, scores, n), onehot);
  return MatMulTransposeLeft(party, design, err, n, inputs, kLrClasses);
}

LrModel TrainLogReg(Party& party, const ShareMatrix& binned,
                    const LrOptions& options) {
  if (options.epochs < 0) throw ParameterError("epochs must be >= 0");
  if (binned.rows == 0) throw ParameterError("training set is empty");
  Party::Scope scope(party, Label::kLr);
  const std::size_t n = binned.rows;
  const std::size_t inputs = binned.cols;
  const ShareVec design = DesignMatrix(party, binned);
  const ShareVec onehot = OneHotLabels(party, binned);
  LrModel model;
  model.inputs = inputs;
  model.weights = ShareVec(inputs * kLrClasses);
  // W -= floor(G * round(lr / n * 2^32) / 2^32).
  const uint64_t step = static_cast<uint64_t>(std::llround(
      std::ldexp(options.learning_rate / static_cast<double>(n), 32)));
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    const ShareVec grad =
        Gradient(party, design, onehot, model.weights, n, inputs);
    model.weights =
        Sub(model.weights, Trunc(party, MulPublic(grad, step), 32));
  }
  return model;
}

ShareVec LrAccuracy(Party& party, const LrModel& model,
                    const ShareMatrix& binned_test) {
  if (binned_test.rows == 0) throw ParameterError("test set is empty");
  if (binned_test.cols != model.inputs) {
    throw ParameterError("test set does not match the model");
  }
  Party::Scope scope(party, Label::kLr);
  const std::size_t n = binned_test.rows;
  const ShareVec design = DesignMatrix(party, binned_test);
  const ShareVec scores =
      MatMul(party, design, model.weights, n, model.inputs, kLrClasses);
  const ShareVec predicted = ArgMax(party, scores, kLrClasses).index;
  const ShareVec hit =
      Eq(party, predicted, binned_test.Column(binned_test.cols - 1));
  const ShareVec count = SumAll(hit);
  return Trunc(party, MulPublic(count, ReciprocalScale(n)),
               32 - party.frac_bits());
}

}  // namespace mpcsdg
