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


#include <algorithm>
#include <cmath>

#include "mpcsdg/eval/logreg.h"
#include "mpcsdg/runtime/session.h"
#include "oracle.h"

namespace mpcsdg::oracle {

uint64_t FloorShift(uint64_t v, int s) {
  return static_cast<uint64_t>(static_cast<int64_t>(v) >> s);
}

bool SignedLess(uint64_t a, uint64_t b) {
  return static_cast<int64_t>(a - b) < 0;
}

uint64_t ClearDiv(uint64_t a, uint64_t b, int frac_bits) {
  constexpr int F = 30;
  constexpr int G = 28;
  uint64_t scale = 0;
  if (b != 0) {
    const int k = 63 - __builtin_clzll(b);
    if (k <= F - 1) scale = uint64_t{1} << (F - 1 - k);
  }
  const uint64_t bn = b * scale;
  uint64_t x = static_cast<uint64_t>(std::llround(std::ldexp(2.9142, F))) -
               2 * bn;
  for (int step = 0; step < 5; ++step) {
    const uint64_t t = FloorShift(bn * x, F);
    const uint64_t e = (uint64_t{1} << (F + 1)) - t;
    x = FloorShift(x * e, F);
  }
  const uint64_t xg = FloorShift(x, F - G);
  const uint64_t q = FloorShift(FloorShift(a * xg, G) * scale, F - frac_bits);
  const uint64_t r = (a << frac_bits) - q * b;
  const uint64_t neg_hi = (r - b) >> 63;
  const uint64_t neg_r = r >> 63;
  return q + 1 - neg_hi - neg_r;
}

std::vector<Words> GeneColumns(const ClearDataset& data,
                               const FixedPointConfig& fp) {
  std::vector<Words> cols(data.d(), Words(data.rows()));
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t g = 0; g < data.d(); ++g) {
      cols[g][r] = Encode(data.gene(r, g), fp).word;
    }
  }
  return cols;
}

std::vector<std::array<uint64_t, 3>> ClearCuts(const std::vector<Words>& cols) {
  std::vector<std::array<uint64_t, 3>> out;
  for (Words sorted : cols) {
    std::sort(sorted.begin(), sorted.end(), SignedLess);
    const std::size_t n = sorted.size();
    std::array<uint64_t, 3> q{};
    for (int r = 0; r < 3; ++r) {
      const std::size_t scaled = (n - 1) * static_cast<std::size_t>(r + 1);
      const std::size_t lo = scaled / 4;
      const uint64_t quarters = scaled % 4;
      q[r] = sorted[lo] +
             FloorShift((sorted[lo + 1] - sorted[lo]) * quarters, 2);
    }
    out.push_back(q);
  }
  return out;
}

int ClearBinIndex(uint64_t x, const std::array<uint64_t, 3>& cuts) {
  int below = 0;
  for (uint64_t q : cuts) below += SignedLess(x, q) ? 1 : 0;
  return 3 - below;
}

BinnedTable ClearBinWithCuts(const ClearDataset& data,
                             const std::vector<std::array<uint64_t, 3>>& cuts,
                             const FixedPointConfig& fp) {
  BinnedTable t;
  t.rows = data.rows();
  t.genes = data.d();
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t g = 0; g < data.d(); ++g) {
      t.cells.push_back(
          ClearBinIndex(Encode(data.gene(r, g), fp).word, cuts[g]));
    }
    t.cells.push_back(data.labels[r]);
  }
  return t;
}

ClearBinning ClearBin(const ClearDataset& data, const FixedPointConfig& fp,
                      bool with_means) {
  ClearBinning out;
  const auto cols = GeneColumns(data, fp);
  out.cuts = ClearCuts(cols);
  out.table = ClearBinWithCuts(data, out.cuts, fp);
  if (!with_means) return out;
  const int f = fp.frac_bits;
  for (std::size_t g = 0; g < data.d(); ++g) {
    std::array<uint64_t, 4> sums{};
    std::array<int64_t, 4> counts{};
    for (std::size_t r = 0; r < data.rows(); ++r) {
      const int b = out.table.at(r, g);
      sums[b] += cols[g][r];
      ++counts[b];
    }
    const auto& q = out.cuts[g];
    const std::array<uint64_t, 4> fallback = {
        q[0], FloorShift(q[0] + q[1], 1), FloorShift(q[1] + q[2], 1), q[2]};
    std::array<uint64_t, 4> means{};
    for (int b = 0; b < 4; ++b) {
      means[b] = counts[b] == 0
                     ? fallback[b]
                     : ClearDiv(sums[b], static_cast<uint64_t>(counts[b]) << f,
                                f);
    }
    out.means.push_back(means);
    out.counts.push_back(counts);
  }
  return out;
}

std::vector<std::array<double, 4>> FloatBinMeans(const ClearDataset& data,
                                                 const BinnedTable& table) {
  std::vector<std::array<double, 4>> out(data.d());
  for (std::size_t g = 0; g < data.d(); ++g) {
    std::array<double, 4> sum{};
    std::array<int, 4> count{};
    for (std::size_t r = 0; r < data.rows(); ++r) {
      sum[table.at(r, g)] += data.gene(r, g);
      ++count[table.at(r, g)];
    }
    for (int b = 0; b < 4; ++b) {
      out[g][b] = count[b] ? sum[b] / count[b] : std::nan("");
    }
  }
  return out;
}

std::vector<int64_t> Counts::Flatten() const {
  std::vector<int64_t> out = gene;
  out.insert(out.end(), label.begin(), label.end());
  out.insert(out.end(), joint.begin(), joint.end());
  return out;
}

Counts BruteMarginals(const BinnedTable& table) {
  const std::size_t d = table.genes;
  Counts c;
  c.gene.assign(d * 4, 0);
  c.joint.assign(d * 20, 0);
  for (std::size_t g = 0; g < d; ++g) {
    for (int b = 0; b < 4; ++b) {
      for (std::size_t r = 0; r < table.rows; ++r) {
        if (table.at(r, g) == b) ++c.gene[g * 4 + b];
      }
    }
  }
  for (int y = 0; y < 5; ++y) {
    for (std::size_t r = 0; r < table.rows; ++r) {
      if (table.at(r, d) == y) ++c.label[y];
    }
  }
  for (std::size_t g = 0; g < d; ++g) {
    for (int b = 0; b < 4; ++b) {
      for (int y = 0; y < 5; ++y) {
        for (std::size_t r = 0; r < table.rows; ++r) {
          if (table.at(r, g) == b && table.at(r, d) == y) {
            ++c.joint[g * 20 + b * 5 + y];
          }
        }
      }
    }
  }
  return c;
}

std::array<Seed, 3> PairKeys(uint64_t master_seed) {
  std::array<Seed, 3> keys;
  for (int i = 0; i < 3; ++i) {
    keys[i] = PairKeyFromPrivateSeed(DeterministicPrivateSeed(master_seed, i));
  }
  return keys;
}

Words ClearGauss(const std::array<Seed, 3>& keys, uint64_t a, uint64_t b,
                 std::size_t n, int frac_bits) {
  Words u(12 * n, 0);
  for (const Seed& k : keys) {
    Prg prg(DeriveSeed("noise", k, a, b));
    const Words w = prg.Next(12 * n);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] ^= w[j];
  }
  const uint64_t mask = (uint64_t{1} << frac_bits) - 1;
  Words out(n, 0 - 6 * (uint64_t{1} << frac_bits));
  for (std::size_t j = 0; j < 12; ++j) {
    for (std::size_t i = 0; i < n; ++i) out[i] += u[j * n + i] & mask;
  }
  return out;
}

Words ClearNoisyMarginals(const Counts& counts, const Words& gauss,
                          double sigma, const FixedPointConfig& fp) {
  const auto flat = counts.Flatten();
  const uint64_t s = Encode(sigma, fp).word;
  Words out(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    out[i] = (static_cast<uint64_t>(flat[i]) << (2 * fp.frac_bits)) +
             s * gauss[i];
  }
  return out;
}

namespace {

uint64_t Reciprocal(std::size_t n) {
  return ((uint64_t{1} << 32) + n - 1) / n;
}

// Unscaled design matrix: bin indices and a bias of one.
Words Design(const BinnedTable& t) {
  const std::size_t k = t.genes + 1;
  Words x(t.rows * k);
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t g = 0; g < t.genes; ++g) {
      x[i * k + g] = static_cast<uint64_t>(t.at(i, g));
    }
    x[i * k + t.genes] = 1;
  }
  return x;
}

Words Scores(const Words& x, const Words& w, std::size_t n, std::size_t k) {
  Words s(n * 5, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 5; ++c) {
      for (std::size_t j = 0; j < k; ++j) s[i * 5 + c] += x[i * k + j] * w[j * 5 + c];
    }
  }
  return s;
}

}  // namespace

uint64_t ClearWle(const BinnedTable& real, const BinnedTable& synthetic,
                  int frac_bits) {
  const auto a = BruteMarginals(real).Flatten();
  const auto b = BruteMarginals(synthetic).Flatten();
  const uint64_t ra = Reciprocal(real.rows);
  const uint64_t rb = Reciprocal(synthetic.rows);
  uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const uint64_t fa =
        FloorShift((static_cast<uint64_t>(a[i]) << frac_bits) * ra, 32);
    const uint64_t fb =
        FloorShift((static_cast<uint64_t>(b[i]) << frac_bits) * rb, 32);
    const int64_t diff = static_cast<int64_t>(fa - fb);
    total += static_cast<uint64_t>(diff < 0 ? -diff : diff);
  }
  return FloorShift(total * Reciprocal(2 * real.genes + 1), 32);
}

ClearLrModel ClearTrainLr(const BinnedTable& train, int epochs,
                          double learning_rate, int frac_bits) {
  const std::size_t n = train.rows;
  const std::size_t k = train.genes + 1;
  const FixedPointConfig fp{frac_bits};
  const Words x = Design(train);
  ClearLrModel model;
  model.inputs = k;
  model.weights.assign(k * 5, 0);
  const uint64_t step = static_cast<uint64_t>(std::llround(
      std::ldexp(learning_rate / static_cast<double>(n), 32)));
  const uint64_t low = Encode(kExpClamp, fp).word;
  const int degree = static_cast<int>(kExpCoefficients.size()) - 1;
  std::vector<uint64_t> coeff(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    coeff[j] = Encode(kExpCoefficients[j] * std::ldexp(1.0, 3 * j), fp).word;
  }
  for (int epoch = 0; epoch < epochs; ++epoch) {
    const Words s = Scores(x, model.weights, n, k);
    Words err(n * 5);
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t mx = s[i * 5];
      for (int c = 1; c < 5; ++c) {
        if (SignedLess(mx, s[i * 5 + c])) mx = s[i * 5 + c];
      }
      std::array<uint64_t, 5> e{};
      uint64_t sum = 0;
      for (int c = 0; c < 5; ++c) {
        uint64_t z = s[i * 5 + c] - mx;
        if (SignedLess(z, low)) z = low;
        const uint64_t t = FloorShift(z, 3);
        uint64_t acc = coeff[degree];
        for (int j = degree - 1; j >= 0; --j) {
          acc = FloorShift(acc * t, frac_bits) + coeff[j];
        }
        e[c] = acc;
        sum += acc;
      }
      const int y = train.at(i, train.genes);
      for (int c = 0; c < 5; ++c) {
        const uint64_t onehot = c == y ? uint64_t{1} << frac_bits : 0;
        err[i * 5 + c] = ClearDiv(e[c], sum, frac_bits) - onehot;
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (int c = 0; c < 5; ++c) {
        uint64_t g = 0;
        for (std::size_t i = 0; i < n; ++i) g += x[i * k + j] * err[i * 5 + c];
        model.weights[j * 5 + c] -= FloorShift(g * step, 32);
      }
    }
  }
  return model;
}

std::vector<int> ClearPredict(const ClearLrModel& model,
                              const BinnedTable& data) {
  const Words s = Scores(Design(data), model.weights, data.rows, model.inputs);
  std::vector<int> out;
  for (std::size_t i = 0; i < data.rows; ++i) {
    int best = 0;
    for (int c = 1; c < 5; ++c) {
      if (SignedLess(s[i * 5 + best], s[i * 5 + c])) best = c;
    }
    out.push_back(best);
  }
  return out;
}

uint64_t ClearAccuracy(const ClearLrModel& model, const BinnedTable& test,
                       int frac_bits) {
  const auto pred = ClearPredict(model, test);
  uint64_t hits = 0;
  for (std::size_t i = 0; i < test.rows; ++i) {
    hits += pred[i] == test.at(i, test.genes) ? 1 : 0;
  }
  return FloorShift(hits * Reciprocal(test.rows), 32 - frac_bits);
}

}  // namespace mpcsdg::oracle
