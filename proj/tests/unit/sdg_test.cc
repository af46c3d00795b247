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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "harness.h"
#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/sdg/bridge.h"
#include "mpcsdg/sdg/indicators.h"
#include "mpcsdg/sdg/marginals.h"
#include "oracle.h"

namespace mpcsdg {
namespace {

using testing::Deal;
using testing::DealMatrix;
using testing::RunAndOpen;
using testing::RunParties;

const FixedPointConfig kFp{};

BinnedTable RandomTable(std::mt19937_64& rng, std::size_t rows,
                        std::size_t genes) {
  BinnedTable t;
  t.rows = rows;
  t.genes = genes;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t g = 0; g < genes; ++g) t.cells.push_back(rng() % 4);
    t.cells.push_back(rng() % 5);
  }
  return t;
}

std::array<ShareMatrix, 3> DealTable(const BinnedTable& t, uint64_t seed = 99) {
  Words cells(t.cells.begin(), t.cells.end());
  return DealMatrix(t.rows, t.genes + 1, cells, seed);
}

Words Scaled(const std::vector<int64_t>& counts, int bits) {
  Words out;
  for (int64_t c : counts) out.push_back(static_cast<uint64_t>(c) << bits);
  return out;
}

TEST(Indicators, TruthTables) {
  const auto x = Deal({0, 1, 2, 3});
  const auto y = Deal({0, 1, 2, 3, 4}, 3);
  const auto out = RunParties<std::pair<ShareVec, ShareVec>>([&](Party& p) {
    return std::make_pair(Indicator4(p, x[p.index()]),
                          Indicator5(p, y[p.index()]));
  });
  const Words i4 = Reconstruct({out[0].first, out[1].first, out[2].first});
  const Words i5 = Reconstruct({out[0].second, out[1].second, out[2].second});
  for (int v = 0; v < 4; ++v) {
    for (int b = 0; b < 4; ++b) {
      EXPECT_EQ(i4[v * 4 + b], v == b ? kFp.One() : 0u) << v << "," << b;
    }
  }
  for (int v = 0; v < 5; ++v) {
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(i5[v * 5 + b], v == b ? kFp.One() : 0u) << v << "," << b;
    }
  }
}

TEST(Indicators, AgreeWithEqualityTests) {
  const Words xs = {0, 1, 2, 3, 3, 0, 2};
  const Words ys = {4, 0, 1, 2, 3, 4, 0};
  const auto x = Deal(xs), y = Deal(ys, 4);
  const auto out = RunParties<std::array<ShareVec, 4>>([&](Party& p) {
    const int i = p.index();
    ShareVec ex, ey;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      for (int b = 0; b < 4; ++b) ex.Append(EqPublic(p, x[i].Slice(k, 1), b));
      for (int b = 0; b < 5; ++b) ey.Append(EqPublic(p, y[i].Slice(k, 1), b));
    }
    return std::array<ShareVec, 4>{Indicator4(p, x[i]), Indicator5(p, y[i]),
                                   ex, ey};
  });
  for (int k = 0; k < 2; ++k) {
    const Words poly = Reconstruct({out[0][k], out[1][k], out[2][k]});
    const Words eq = Reconstruct({out[0][k + 2], out[1][k + 2], out[2][k + 2]});
    ASSERT_EQ(poly.size(), eq.size());
    for (std::size_t j = 0; j < poly.size(); ++j) {
      EXPECT_EQ(poly[j], eq[j] * kFp.One());
    }
  }
}

TEST(ExactMarginals, GeneColumnCounts) {
  BinnedTable t{3, 1, {0, 2, 1, 2, 1, 4}};
  const auto m = DealTable(t);
  const auto out = RunParties<MarginalSet>(
      [&](Party& p) { return ExactMarginals(p, m[p.index()]); });
  EXPECT_EQ(out[0].scale_bits, kFp.frac_bits);
  const Words gene = Reconstruct({out[0].gene, out[1].gene, out[2].gene});
  EXPECT_EQ(gene, Scaled({1, 2, 0, 0}, kFp.frac_bits));
}

TEST(ExactMarginals, SingleRowJointIndex) {
  BinnedTable t{1, 1, {3, 4}};
  const auto m = DealTable(t);
  const auto out = RunParties<MarginalSet>(
      [&](Party& p) { return ExactMarginals(p, m[p.index()]); });
  const Words joint = Reconstruct({out[0].joint, out[1].joint, out[2].joint});
  ASSERT_EQ(joint.size(), 20u);
  for (int c = 0; c < 20; ++c) {
    EXPECT_EQ(joint[c], c == 3 * 5 + 4 ? kFp.One() : 0u) << c;
  }
}

TEST(ExactMarginals, MatchBruteForceAndSumToN) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 60, d = 1 + rng() % 5;
    const BinnedTable table = RandomTable(rng, n, d);
    const auto m = DealTable(table, t);
    const auto out = RunParties<MarginalSet>(
        [&](Party& p) { return ExactMarginals(p, m[p.index()]); });
    const Words got = Reconstruct(
        {out[0].Flatten(), out[1].Flatten(), out[2].Flatten()});
    const oracle::Counts c = oracle::BruteMarginals(table);
    ASSERT_EQ(got, Scaled(c.Flatten(), kFp.frac_bits)) << "trial " << t;
    const uint64_t nf = static_cast<uint64_t>(n) << kFp.frac_bits;
    for (std::size_t g = 0; g < d; ++g) {
      uint64_t one = 0, two = 0;
      for (int b = 0; b < 4; ++b) one += got[g * 4 + b];
      for (int c2 = 0; c2 < 20; ++c2) two += got[4 * d + 5 + g * 20 + c2];
      EXPECT_EQ(one, nf);
      EXPECT_EQ(two, nf);
    }
    uint64_t lab = 0;
    for (int f = 0; f < 5; ++f) lab += got[4 * d + f];
    EXPECT_EQ(lab, nf);
  }
}

TEST(NoisyMarginals, ZeroSigmaIsExactAtDoublePrecision) {
  std::mt19937_64 rng(42);
  const BinnedTable table = RandomTable(rng, 30, 3);
  const auto m = DealTable(table);
  const auto out = RunParties<MarginalSet>(
      [&](Party& p) { return NoisyMarginals(p, m[p.index()], 0.0); });
  EXPECT_EQ(out[0].scale_bits, 2 * kFp.frac_bits);
  const Words got =
      Reconstruct({out[0].Flatten(), out[1].Flatten(), out[2].Flatten()});
  EXPECT_EQ(got, Scaled(oracle::BruteMarginals(table).Flatten(),
                        2 * kFp.frac_bits));
}

TEST(NoisyMarginals, NoiseMatchesClearMirror) {
  std::mt19937_64 rng(43);
  const BinnedTable table = RandomTable(rng, 25, 2);
  const auto m = DealTable(table);
  const double sigma = 4.84481;
  const auto out = RunParties<MarginalSet>([&](Party& p) {
    p.ReseedNoise(3, 4);
    return NoisyMarginals(p, m[p.index()], sigma);
  });
  const Words got =
      Reconstruct({out[0].Flatten(), out[1].Flatten(), out[2].Flatten()});
  const oracle::Counts c = oracle::BruteMarginals(table);
  const Words gauss = oracle::ClearGauss(oracle::PairKeys(1), 3, 4,
                                         c.Flatten().size(), kFp.frac_bits);
  EXPECT_EQ(got, oracle::ClearNoisyMarginals(c, gauss, sigma, kFp));
}

TEST(NoisyMarginals, NoiseCellsUncorrelated) {
  const BinnedTable table{4, 1, {0, 0, 1, 1, 2, 2, 3, 3}};
  const auto m = DealTable(table);
  const int runs = 1000;
  const auto out = RunParties<ShareVec>([&](Party& p) {
    ShareVec all;
    for (int r = 0; r < runs; ++r) {
      p.ReseedNoise(r, 17);
      all.Append(NoisyMarginals(p, m[p.index()], 1.0).Flatten());
    }
    return all;
  });
  const Words got = Reconstruct(out);
  const std::size_t cells = got.size() / runs;
  const Words exact = Scaled(oracle::BruteMarginals(table).Flatten(),
                             2 * kFp.frac_bits);
  const auto noise = [&](int r, std::size_t c) {
    return DecodeScaled(got[r * cells + c] - exact[c], 2 * kFp.frac_bits);
  };
  // Pearson correlation; |r| beyond 2.576 / sqrt(n) rejects at 0.01.
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 4},
                      {4, 9}, {1, 28}}) {
    double mi = 0, mj = 0;
    for (int r = 0; r < runs; ++r) {
      mi += noise(r, i);
      mj += noise(r, j);
    }
    mi /= runs;
    mj /= runs;
    double sij = 0, sii = 0, sjj = 0;
    for (int r = 0; r < runs; ++r) {
      const double a = noise(r, i) - mi, b = noise(r, j) - mj;
      sij += a * b;
      sii += a * a;
      sjj += b * b;
    }
    EXPECT_LT(std::abs(sij / std::sqrt(sii * sjj)), 2.576 / std::sqrt(runs))
        << i << "," << j;
  }
}

TEST(NoisyMarginals, RunsUnderNoisyMargLabel) {
  const BinnedTable table{2, 1, {0, 1, 3, 4}};
  const auto m = DealTable(table);
  const auto ledgers = RunParties<CommLedger>([&](Party& p) {
    NoisyMarginals(p, m[p.index()], 2.0);
    return p.ledger();
  });
  const uint64_t marg = ledgers[0].Get(Label::kNoisyMarg).bytes_sent;
  const uint64_t gauss = ledgers[0].Get(Label::kGauss).bytes_sent;
  EXPECT_GT(marg, 0u);
  EXPECT_GT(gauss, 0u);
  EXPECT_EQ(ledgers[0].TotalBytes(), marg + gauss);
}

TEST(Calibrate, ClosedForm) {
  const NoiseCalibration c = Calibrate(1917, 1917e-5, 1917);
  EXPECT_DOUBLE_EQ(c.epsilon_q, 1.0);
  EXPECT_NEAR(c.delta_q, 1e-5, 1e-18);
  EXPECT_NEAR(c.sigma, std::sqrt(2 * std::log(125000.0)), 1e-12);
  EXPECT_NEAR(c.sigma, 4.84481, 1e-5);
  EXPECT_EQ(c.measurements, 1917u);
  const NoiseCalibration one = Calibrate(3.0, 1e-5, 1);
  EXPECT_DOUBLE_EQ(one.epsilon_q, 3.0);
  EXPECT_NEAR(Calibrate(1.5, 1e-5, 1).sigma, 2 * one.sigma, 1e-12);
  EXPECT_EQ(MeasurementCount(10), 21u);
}

TEST(Calibrate, RejectsBadBudgets) {
  EXPECT_THROW(Calibrate(0, 1e-5, 3), ParameterError);
  EXPECT_THROW(Calibrate(-1, 1e-5, 3), ParameterError);
  EXPECT_THROW(Calibrate(1, 0, 3), ParameterError);
  EXPECT_THROW(Calibrate(1, 1, 3), ParameterError);
  EXPECT_THROW(Calibrate(1, 1e-5, 0), ParameterError);
}

ClearMarginals FromCounts(const oracle::Counts& c, std::size_t genes) {
  ClearMarginals m;
  m.genes = genes;
  for (int64_t v : c.gene) m.gene.push_back(v);
  for (int64_t v : c.label) m.label.push_back(v);
  for (int64_t v : c.joint) m.joint.push_back(v);
  return m;
}

TEST(Generator, ConstantGeneStaysConstant) {
  std::mt19937_64 rng(44);
  BinnedTable t = RandomTable(rng, 50, 3);
  for (std::size_t r = 0; r < t.rows; ++r) t.cells[r * 4 + 1] = 2;
  const ClearMarginals m = FromCounts(oracle::BruteMarginals(t), 3);
  const BinnedTable s = GenerateSynthetic(m, 500, 10, 5);
  for (std::size_t r = 0; r < s.rows; ++r) EXPECT_EQ(s.at(r, 1), 2);
}

TEST(Generator, LabelFrequenciesWithinMultinomialBounds) {
  std::mt19937_64 rng(45);
  const BinnedTable t = RandomTable(rng, 200, 2);
  const oracle::Counts c = oracle::BruteMarginals(t);
  const std::size_t n = 10000;
  const BinnedTable s = GenerateSynthetic(FromCounts(c, 2), n, 15, 6);
  std::array<int, 5> seen{};
  for (std::size_t r = 0; r < n; ++r) ++seen[s.at(r, 2)];
  for (int f = 0; f < 5; ++f) {
    const double p = c.label[f] / 200.0;
    const double sd = std::sqrt(n * p * (1 - p));
    EXPECT_LE(std::abs(seen[f] - n * p), 3 * sd) << f;
  }
}

TEST(Generator, ConsistentMarginalsAreAFixedPoint) {
  std::mt19937_64 rng(46);
  const BinnedTable t = RandomTable(rng, 80, 4);
  const ClearMarginals m = FromCounts(oracle::BruteMarginals(t), 4);
  const FittedModel a = FitModel(m, 0), b = FitModel(m, 30);
  for (std::size_t g = 0; g < 4; ++g) {
    for (int c = 0; c < 20; ++c) {
      EXPECT_NEAR(a.joint[g][c], b.joint[g][c], 1e-9);
    }
  }
}

double Kl(const std::vector<double>& p, const std::vector<double>& q) {
  double sp = 0, sq = 0, kl = 0;
  for (double x : p) sp += x;
  for (double x : q) sq += x;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) kl += p[i] / sp * std::log((p[i] / sp) / (q[i] / sq));
  }
  return kl;
}

TEST(Generator, ProportionalFittingIsMonotone) {
  std::mt19937_64 rng(47);
  const BinnedTable t = RandomTable(rng, 120, 3);
  ClearMarginals m = FromCounts(oracle::BruteMarginals(t), 3);
  std::normal_distribution<double> noise(0, 4);
  for (double& v : m.gene) v += noise(rng);
  for (double& v : m.label) v += noise(rng);
  for (double& v : m.joint) v += noise(rng);
  std::vector<double> prev(3, 1e9);
  for (int it = 0; it <= 20; ++it) {
    const FittedModel fit = FitModel(m, it);
    for (std::size_t g = 0; g < 3; ++g) {
      std::vector<double> rows(4, 0), cols(5, 0), trow, tcol;
      for (int r = 0; r < 4; ++r) {
        for (int f = 0; f < 5; ++f) {
          rows[r] += fit.joint[g][r * 5 + f];
          cols[f] += fit.joint[g][r * 5 + f];
        }
      }
      trow.assign(fit.gene[g].begin(), fit.gene[g].end());
      tcol.assign(fit.label.begin(), fit.label.end());
      const double kl = Kl(trow, rows) + Kl(tcol, cols);
      EXPECT_LE(kl, prev[g] + 1e-12) << "gene " << g << " iteration " << it;
      prev[g] = kl;
    }
  }
}

TEST(Generator, AllZeroMarginalsFallBackToUniform) {
  ClearMarginals m;
  m.genes = 2;
  m.gene.assign(8, -3.0);
  m.label.assign(5, 0.0);
  m.joint.assign(40, 0.0);
  const BinnedTable s = GenerateSynthetic(m, 5000, 10, 7);
  std::array<int, 5> labels{};
  std::array<int, 4> bins{};
  for (std::size_t r = 0; r < s.rows; ++r) {
    ++labels[s.at(r, 2)];
    ++bins[s.at(r, 0)];
  }
  for (int c : labels) EXPECT_NEAR(c / 5000.0, 0.2, 0.03);
  for (int c : bins) EXPECT_NEAR(c / 5000.0, 0.25, 0.03);
}

TEST(Generator, DeterministicInSeed) {
  std::mt19937_64 rng(48);
  const ClearMarginals m =
      FromCounts(oracle::BruteMarginals(RandomTable(rng, 40, 2)), 2);
  EXPECT_EQ(GenerateSynthetic(m, 100, 10, 9).cells,
            GenerateSynthetic(m, 100, 10, 9).cells);
  EXPECT_NE(GenerateSynthetic(m, 100, 10, 9).cells,
            GenerateSynthetic(m, 100, 10, 10).cells);
}

TEST(SecureGenerate, ReshareMatchesEnclaveOutput) {
  std::mt19937_64 rng(49);
  const BinnedTable table = RandomTable(rng, 40, 3);
  const auto m = DealTable(table);
  const GeneratorRequest req{60, 15, 1234};
  struct Out {
    ShareVec noisy;
    ShareMatrix synthetic;
    CommLedger sdg;
    std::size_t openings = 0, reveals = 0;
  };
  const auto out = RunParties<Out>([&](Party& p) {
    Out o;
    const MarginalSet noisy = NoisyMarginals(p, m[p.index()], 2.0);
    o.noisy = noisy.Flatten();
    const CommLedger before = p.ledger();
    o.synthetic = SecureGenerate(p, noisy, req);
    o.sdg = p.ledger().Since(before);
    o.openings = p.openings().size();
    o.reveals = p.enclave_reveals().size();
    return o;
  });
  const Words noisy = Reconstruct({out[0].noisy, out[1].noisy, out[2].noisy});
  const BinnedTable expect = GenerateSynthetic(
      DecodeMarginals(noisy, 3, 2 * kFp.frac_bits), req.n_out, req.iterations,
      req.seed);
  EXPECT_EQ(out[0].synthetic.rows, 60u);
  EXPECT_EQ(out[0].synthetic.cols, 4u);
  const Words got = Reconstruct({out[0].synthetic.cells,
                                 out[1].synthetic.cells,
                                 out[2].synthetic.cells});
  ASSERT_EQ(got.size(), expect.cells.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    EXPECT_EQ(got[k], static_cast<uint64_t>(expect.cells[k]));
    EXPECT_LT(got[k], (k % 4 == 3) ? 5u : 4u);
  }
  for (const auto& o : out) {
    EXPECT_EQ(o.openings, 0u);
    EXPECT_EQ(o.sdg.TotalBytes(), o.sdg.Get(Label::kSdg).bytes_sent);
  }
  EXPECT_GT(out[kEnclaveParty].sdg.Get(Label::kSdg).bytes_sent, 0u);
  EXPECT_EQ(out[kEnclaveParty].reveals, 1u);
}

}  // namespace
}  // namespace mpcsdg
