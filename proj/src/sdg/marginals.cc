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


#include "mpcsdg/sdg/marginals.h"

#include <cmath>

#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/random.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/sdg/indicators.h"

namespace mpcsdg {

ShareVec MarginalSet::Flatten() const {
  ShareVec out = gene;
  out.Append(label);
  out.Append(joint);
  return out;
}

MarginalSet MarginalSet::Unflatten(const ShareVec& v, std::size_t genes,
                                   int scale_bits) {
  MarginalSet m;
  m.genes = genes;
  m.scale_bits = scale_bits;
  if (v.size() != genes * 4 + kLabelClasses + genes * kJointCells) {
    throw ParameterError("marginal vector has the wrong length");
  }
  m.gene = v.Slice(0, genes * 4);
  m.label = v.Slice(genes * 4, kLabelClasses);
  m.joint = v.Slice(genes * 4 + kLabelClasses, genes * kJointCells);
  return m;
}

NoiseCalibration Calibrate(double epsilon, double delta,
                           std::size_t measurements) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be positive");
  }
  if (!(delta > 0 && delta < 1)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (measurements == 0) throw ParameterError("no measurements to calibrate");
  NoiseCalibration c;
  c.measurements = measurements;
  c.epsilon_q = epsilon / static_cast<double>(measurements);
  c.delta_q = delta / static_cast<double>(measurements);
  c.sigma = std::sqrt(2.0 * std::log(1.25 / c.delta_q)) / c.epsilon_q;
  return c;
}

MarginalSet ExactMarginals(Party& party, const ShareMatrix& binned) {
  if (binned.cols < 1) throw ParameterError("dataset has no label column");
  const std::size_t n = binned.rows;
  const std::size_t d = binned.cols - 1;
  const int f = party.frac_bits();
  const ShareMatrix genes = binned.Columns(0, d);
  const ShareVec labels = binned.Column(d);
  const IndicatorNumerators num =
      ComputeIndicatorNumerators(party, genes.cells, labels);

  MarginalSet m;
  m.genes = d;
  m.scale_bits = f;
  m.gene = ShareVec(d * 4);
  m.label = ShareVec(kLabelClasses);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < d; ++g) {
      for (int b = 0; b < 4; ++b) {
        m.gene.a[g * 4 + b] += num.gene.a[(i * d + g) * 4 + b];
        m.gene.b[g * 4 + b] += num.gene.b[(i * d + g) * 4 + b];
      }
    }
    for (int k = 0; k < kLabelClasses; ++k) {
      m.label.a[k] += num.label.a[i * kLabelClasses + k];
      m.label.b[k] += num.label.b[i * kLabelClasses + k];
    }
  }
  Words gene_c(d * 4), label_c(kLabelClasses), joint_c(d * kJointCells);
  for (std::size_t k = 0; k < gene_c.size(); ++k) {
    gene_c[k] = ExactDivisionConstant(kGeneIndicatorDivisors[k % 4], f);
  }
  for (int k = 0; k < kLabelClasses; ++k) {
    label_c[k] = ExactDivisionConstant(kLabelIndicatorDivisors[k], f);
  }
  for (std::size_t k = 0; k < joint_c.size(); ++k) {
    const int cell = static_cast<int>(k % kJointCells);
    joint_c[k] = ExactDivisionConstant(
        kGeneIndicatorDivisors[cell / kLabelClasses] *
            kLabelIndicatorDivisors[cell % kLabelClasses],
        f);
  }
  m.gene = MulPublic(m.gene, gene_c);
  m.label = MulPublic(m.label, label_c);

  // Joint cell (g, r, f) = sum_i G[i][g][r] * L[i][f], one inner product
  // of length n each.
  ShareVec lhs(d * kJointCells * n), rhs(d * kJointCells * n);
  for (std::size_t g = 0; g < d; ++g) {
    for (int cell = 0; cell < kJointCells; ++cell) {
      const int r = cell / kLabelClasses;
      const int fl = cell % kLabelClasses;
      const std::size_t base = (g * kJointCells + cell) * n;
      for (std::size_t i = 0; i < n; ++i) {
        lhs.a[base + i] = num.gene.a[(i * d + g) * 4 + r];
        lhs.b[base + i] = num.gene.b[(i * d + g) * 4 + r];
        rhs.a[base + i] = num.label.a[i * kLabelClasses + fl];
        rhs.b[base + i] = num.label.b[i * kLabelClasses + fl];
      }
    }
  }
  if (d > 0 && n > 0) {
    m.joint = MulPublic(InnerProducts(party, lhs, rhs, n), joint_c);
  } else {
    m.joint = ShareVec(d * kJointCells);
  }
  return m;
}

MarginalSet NoisyMarginals(Party& party, const ShareMatrix& binned,
                           double sigma) {
  Party::Scope scope(party, Label::kNoisyMarg);
  if (!(sigma >= 0) || !std::isfinite(sigma)) {
    throw ParameterError("noise scale must be finite and non-negative");
  }
  const MarginalSet exact = ExactMarginals(party, binned);
  const ShareVec counts = exact.Flatten();
  const ShareVec noise = Gauss01(party, counts.size());
  const uint64_t sigma_raw = Encode(sigma, party.fp()).word;
  const ShareVec noisy = Add(MulPublic(counts, party.fp().One()),
                             MulPublic(noise, sigma_raw));
  return MarginalSet::Unflatten(noisy, exact.genes, 2 * party.frac_bits());
}

}  // namespace mpcsdg
