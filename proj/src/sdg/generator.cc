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


#include "mpcsdg/sdg/generator.h"

#include <algorithm>
#include <random>

#include "mpcsdg/errors.h"

namespace mpcsdg {

namespace {

double Clip(double v) { return v > 0 ? v : 0.0; }

template <std::size_t K>
double Sum(const std::array<double, K>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

// Rescales clipped weights to `total`; uniform when they are all zero.
template <std::size_t K>
std::array<double, K> ToTotal(std::array<double, K> w, double total) {
  const double s = Sum(w);
  if (s > 0) {
    const double factor = total / s;
    for (double& x : w) x *= factor;
  } else {
    w.fill(total / K);
  }
  return w;
}

// Index of the bucket u falls into; zero-weight buckets are never chosen.
template <std::size_t K>
int Pick(const std::array<double, K>& w, double u) {
  double total = 0;
  for (double x : w) total += x;
  const double target = u * total;
  double cum = 0;
  int last = 0;
  for (std::size_t k = 0; k < K; ++k) {
    if (w[k] <= 0) continue;
    cum += w[k];
    last = static_cast<int>(k);
    if (target < cum) return last;
  }
  return last;
}

double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FittedModel FitModel(const ClearMarginals& m, int iterations) {
  if (iterations < 0) throw ParameterError("iterations must be >= 0");
  const std::size_t d = m.genes;
  if (m.gene.size() != d * 4 || m.label.size() != 5 ||
      m.joint.size() != d * 20) {
    throw ParameterError("marginals have the wrong shape");
  }
  FittedModel model;
  for (int k = 0; k < 5; ++k) model.label[k] = Clip(m.label[k]);
  double total = Sum(model.label);
  if (total <= 0) {
    total = 1.0;
    model.label.fill(0.2);
  }
  model.gene.resize(d);
  model.joint.resize(d);
  for (std::size_t g = 0; g < d; ++g) {
    std::array<double, 4> gt;
    for (int b = 0; b < 4; ++b) gt[b] = Clip(m.gene[g * 4 + b]);
    gt = ToTotal(gt, total);
    model.gene[g] = gt;

    JointTable t;
    for (int c = 0; c < 20; ++c) t[c] = Clip(m.joint[g * 20 + c]);
    t = ToTotal(t, total);
    for (int it = 0; it < iterations; ++it) {
      for (int r = 0; r < 4; ++r) {
        double rs = 0;
        for (int f = 0; f < 5; ++f) rs += t[r * 5 + f];
        if (rs > 0) {
          const double factor = gt[r] / rs;
          for (int f = 0; f < 5; ++f) t[r * 5 + f] *= factor;
        } else if (gt[r] > 0) {
          for (int f = 0; f < 5; ++f) t[r * 5 + f] = gt[r] / 5;
        }
      }
      for (int f = 0; f < 5; ++f) {
        double cs = 0;
        for (int r = 0; r < 4; ++r) cs += t[r * 5 + f];
        if (cs > 0) {
          const double factor = model.label[f] / cs;
          for (int r = 0; r < 4; ++r) t[r * 5 + f] *= factor;
        } else if (model.label[f] > 0) {
          for (int r = 0; r < 4; ++r) t[r * 5 + f] = model.label[f] / 4;
        }
      }
    }
    model.joint[g] = t;
  }
  return model;
}

BinnedTable SampleRows(const FittedModel& model, std::size_t n_out,
                       uint64_t seed) {
  const std::size_t d = model.gene.size();
  BinnedTable out;
  out.rows = n_out;
  out.genes = d;
  out.cells.resize(n_out * (d + 1));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n_out; ++i) {
    const int y = Pick(model.label, Uniform(rng));
    out.cells[i * (d + 1) + d] = y;
    for (std::size_t g = 0; g < d; ++g) {
      std::array<double, 4> w;
      for (int r = 0; r < 4; ++r) w[r] = model.joint[g][r * 5 + y];
      if (Sum(w) <= 0) w = model.gene[g];
      if (Sum(w) <= 0) w.fill(1.0);
      out.cells[i * (d + 1) + g] = Pick(w, Uniform(rng));
    }
  }
  return out;
}

BinnedTable GenerateSynthetic(const ClearMarginals& m, std::size_t n_out,
                              int iterations, uint64_t seed) {
  return SampleRows(FitModel(m, iterations), n_out, seed);
}

}  // namespace mpcsdg
