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

#include <random>

#include "harness.h"
#include "mpcsdg/errors.h"
#include "mpcsdg/preprocess/binning.h"
#include "mpcsdg/rss/arith.h"
#include "oracle.h"

namespace mpcsdg {
namespace {

using testing::Deal;
using testing::DealMatrix;
using testing::EncodeAll;
using testing::RunAndOpen;
using testing::RunParties;

const FixedPointConfig kFp{};

// One gene column as an (n x 1) matrix.
std::array<ShareMatrix, 3> Column(const std::vector<double>& xs,
                                  uint64_t seed = 99) {
  return DealMatrix(xs.size(), 1, EncodeAll(xs), seed);
}

std::array<QuantileCuts, 3> DealCuts(const std::vector<double>& q) {
  const auto v = Deal(EncodeAll(q), 77);
  std::array<QuantileCuts, 3> out;
  for (int p = 0; p < 3; ++p) out[p] = {q.size() / 3, v[p]};
  return out;
}

ShareMatrix Open(const std::array<ShareMatrix, 3>& m) {
  ShareMatrix out = m[0];
  out.cells.a = Reconstruct({m[0].cells, m[1].cells, m[2].cells});
  return out;
}

TEST(QuantilePos, PublicInterpolationPoints) {
  EXPECT_EQ(QuantilePos(5, 0).lo, 1u);
  EXPECT_EQ(QuantilePos(5, 0).quarters, 0);
  EXPECT_EQ(QuantilePos(2, 1).lo, 0u);
  EXPECT_EQ(QuantilePos(2, 1).quarters, 2);
  EXPECT_EQ(QuantilePos(4, 2).lo, 2u);
  EXPECT_EQ(QuantilePos(4, 2).quarters, 1);
}

TEST(Quantiles, Examples) {
  const auto a = Column({50, 10, 40, 20, 30});
  const auto b = Column({-2.5, -2.5, -2.5, -2.5}, 3);
  const auto c = Column({100, 0}, 4);
  const Words got = RunAndOpen([&](Party& p) {
    ShareVec out = ComputeQuantiles(p, a[p.index()]).q;
    out.Append(ComputeQuantiles(p, b[p.index()]).q);
    out.Append(ComputeQuantiles(p, c[p.index()]).q);
    return out;
  });
  EXPECT_EQ(got, EncodeAll({20, 30, 40, -2.5, -2.5, -2.5, 25, 50, 75}));
}

TEST(Quantiles, FewerThanTwoRowsIsParameterError) {
  const auto a = Column({1.0});
  EXPECT_THROW(RunParties<int>([&](Party& p) {
                 ComputeQuantiles(p, a[p.index()]);
                 return 0;
               }),
               ProtocolAbort);
}

TEST(BinColumns, StrictCutSemantics) {
  const auto x = Column({10, 30, 50, 20, 40, 25});
  const auto cuts = DealCuts({20, 30, 40});
  const Words got = RunAndOpen([&](Party& p) {
    return BinColumns(p, x[p.index()], cuts[p.index()]).cells;
  });
  EXPECT_EQ(got, (Words{0, 2, 3, 1, 3, 1}));
}

TEST(BinMeans, TwoValuesInFirstBin) {
  const auto x = Column({10, 20});
  const auto cuts = DealCuts({100, 200, 300});
  const auto out = RunParties<BinMeans>([&](Party& p) {
    const int i = p.index();
    const ShareMatrix binned = BinColumns(p, x[i], cuts[i]);
    return ComputeBinMeans(p, binned, x[i], cuts[i]);
  });
  const Words means = Reconstruct({out[0].means, out[1].means, out[2].means});
  const Words counts =
      Reconstruct({out[0].counts, out[1].counts, out[2].counts});
  EXPECT_EQ(counts, (Words{2, 0, 0, 0}));
  // Empty bins fall back to Q0, the cut midpoints and Q2.
  EXPECT_EQ(means, EncodeAll({15, 150, 250, 300}));
}

TEST(BinMeans, OneValuePerBin) {
  const auto x = Column({4, 1, 3, 2});
  const auto out = RunParties<BinningResult>([&](Party& p) {
    ShareMatrix data(4, 2);
    data.SetColumn(0, x[p.index()].cells);
    return Bin(p, data, true);
  });
  EXPECT_EQ(Reconstruct({out[0].binned.cells, out[1].binned.cells,
                         out[2].binned.cells}),
            (Words{3, 0, 0, 0, 2, 0, 1, 0}));
  EXPECT_EQ(Reconstruct({out[0].means->means, out[1].means->means,
                         out[2].means->means}),
            EncodeAll({1, 2, 3, 4}));
}

TEST(Bin, MatchesClearOracleOnRandomData) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 4; ++t) {
    const std::size_t n = 20 + rng() % 60, d = 2 + rng() % 4;
    const ClearDataset data = testing::RandomDataset(rng, n, d);
    const auto m = DealMatrix(n, d + 1, testing::DatasetWords(data), t);
    const auto out = RunParties<BinningResult>(
        [&](Party& p) { return Bin(p, m[p.index()], true); });
    const auto clear = oracle::ClearBin(data, kFp, true);

    const Words cells = Reconstruct(
        {out[0].binned.cells, out[1].binned.cells, out[2].binned.cells});
    ASSERT_EQ(cells.size(), clear.table.cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      EXPECT_EQ(cells[k], static_cast<uint64_t>(clear.table.cells[k])) << k;
    }
    const Words q =
        Reconstruct({out[0].cuts.q, out[1].cuts.q, out[2].cuts.q});
    const Words means = Reconstruct(
        {out[0].means->means, out[1].means->means, out[2].means->means});
    const Words counts = Reconstruct(
        {out[0].means->counts, out[1].means->counts, out[2].means->counts});
    const auto float_means = oracle::FloatBinMeans(data, clear.table);
    const double tol = std::ldexp(1.0, -kFp.frac_bits + 2);
    for (std::size_t g = 0; g < d; ++g) {
      EXPECT_LE(static_cast<int64_t>(q[3 * g]), static_cast<int64_t>(q[3 * g + 1]));
      EXPECT_LE(static_cast<int64_t>(q[3 * g + 1]), static_cast<int64_t>(q[3 * g + 2]));
      uint64_t total = 0;
      for (int b = 0; b < 4; ++b) {
        EXPECT_EQ(q[3 * g + (b < 3 ? b : 2)], clear.cuts[g][b < 3 ? b : 2]);
        EXPECT_EQ(means[4 * g + b], clear.means[g][b]);
        EXPECT_EQ(static_cast<int64_t>(counts[4 * g + b]), clear.counts[g][b]);
        if (clear.counts[g][b] > 0) {
          EXPECT_NEAR(Decode(RingValue(means[4 * g + b]), kFp),
                      float_means[g][b], tol);
        }
        total += counts[4 * g + b];
      }
      EXPECT_EQ(total, n);
    }
  }
}

TEST(Bin, MonotoneInValue) {
  std::mt19937_64 rng(32);
  std::vector<double> xs;
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 40; ++i) xs.push_back(std::round(u(rng) * 100) / 100);
  const auto x = Column(xs);
  const Words bins = RunAndOpen([&](Party& p) {
    return BinColumns(p, x[p.index()], ComputeQuantiles(p, x[p.index()])).cells;
  });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (xs[i] <= xs[j]) EXPECT_LE(bins[i], bins[j]);
    }
  }
}

TEST(Bin, WithoutMeansSkipsDivision) {
  std::mt19937_64 rng(33);
  const ClearDataset data = testing::RandomDataset(rng, 30, 3);
  const auto m = DealMatrix(30, 4, testing::DatasetWords(data));
  const auto ledgers = RunParties<std::array<CommLedger, 2>>([&](Party& p) {
    const BinningResult without = Bin(p, m[p.index()], false);
    EXPECT_FALSE(without.means.has_value());
    const CommLedger first = p.ledger();
    Bin(p, m[p.index()], true);
    return std::array<CommLedger, 2>{first, p.ledger().Since(first)};
  });
  const LabelStats a = ledgers[0][0].Get(Label::kBin);
  const LabelStats b = ledgers[0][1].Get(Label::kBin);
  EXPECT_EQ(a.ops("div"), 0u);
  EXPECT_EQ(b.ops("div"), 12u);
  EXPECT_LT(a.bytes_sent, b.bytes_sent);
  EXPECT_EQ(ledgers[0][0].TotalBytes(),
            a.bytes_sent + ledgers[0][0].Get(Label::kSort).bytes_sent);
}

TEST(BinTest, TrainCutsOnHeldOutRows) {
  std::mt19937_64 rng(34);
  const ClearDataset train = testing::RandomDataset(rng, 40, 3);
  ClearDataset test = testing::RandomDataset(rng, 10, 3);
  // Row 0 of the test split duplicates train row 5.
  for (int g = 0; g < 3; ++g) test.genes[g] = train.genes[5 * 3 + g];
  test.labels[0] = train.labels[5];
  const auto tr = DealMatrix(40, 4, testing::DatasetWords(train));
  const auto te = DealMatrix(10, 4, testing::DatasetWords(test), 5);
  const auto empty = DealMatrix(0, 4, {}, 6);
  const auto out = RunParties<std::array<ShareMatrix, 3>>([&](Party& p) {
    const int i = p.index();
    const BinningResult fit = Bin(p, tr[i], false);
    const CommLedger before = p.ledger();
    ShareMatrix held = BinTest(p, te[i], fit.cuts);
    const LabelStats s = p.ledger().Since(before).Get(Label::kBinTest);
    EXPECT_EQ(s.ops("lt"), 3u * 10 * 3);
    EXPECT_EQ(s.ops("sort"), 0u);
    EXPECT_EQ(p.ledger().Since(before).Get(Label::kSort).bytes_sent, 0u);
    ShareMatrix none = BinTest(p, empty[i], fit.cuts);
    return std::array<ShareMatrix, 3>{fit.binned, held, none};
  });
  const ShareMatrix train_bins = Open({out[0][0], out[1][0], out[2][0]});
  const ShareMatrix test_bins = Open({out[0][1], out[1][1], out[2][1]});
  for (int c = 0; c < 4; ++c) {
    EXPECT_EQ(test_bins.cells.a[c], train_bins.cells.a[5 * 4 + c]);
  }
  const auto clear_cuts = oracle::ClearBin(train, kFp, false).cuts;
  const BinnedTable expect = oracle::ClearBinWithCuts(test, clear_cuts, kFp);
  for (std::size_t k = 0; k < expect.cells.size(); ++k) {
    EXPECT_EQ(test_bins.cells.a[k], static_cast<uint64_t>(expect.cells[k]));
  }
  EXPECT_EQ(out[0][2].rows, 0u);
  EXPECT_TRUE(out[0][2].cells.empty());
}

TEST(InvBin, SelectsBinMean) {
  const auto binned = DealMatrix(3, 2, {2, 4, 0, 1, 7, 3});
  const auto means = Deal(EncodeAll({-1.5, 0.25, 9, 12}), 5);
  const auto out = RunParties<ShareMatrix>([&](Party& p) {
    BinMeans m;
    m.genes = 1;
    m.means = means[p.index()];
    m.counts = ShareVec(4);
    return InvBin(p, binned[p.index()], m);
  });
  const ShareMatrix o = Open(out);
  // Gene cells become means; labels stay; out-of-range bin 7 yields 0.
  EXPECT_EQ(o.cells.a, (Words{Encode(9, kFp).word, 4, Encode(-1.5, kFp).word,
                              1, 0, 3}));
}

TEST(InvBin, ConstantColumnRoundTrip) {
  const auto x = DealMatrix(6, 2, {Encode(3.75, kFp).word, 0,
                                   Encode(3.75, kFp).word, 1,
                                   Encode(3.75, kFp).word, 2,
                                   Encode(3.75, kFp).word, 3,
                                   Encode(3.75, kFp).word, 4,
                                   Encode(3.75, kFp).word, 0});
  const auto out = RunParties<ShareMatrix>([&](Party& p) {
    const BinningResult r = Bin(p, x[p.index()], true);
    return InvBin(p, r.binned, *r.means);
  });
  const ShareMatrix o = Open(out);
  for (int r = 0; r < 6; ++r) EXPECT_EQ(o.cells.a[2 * r], Encode(3.75, kFp).word);
}

TEST(InvBin, RoundTripMatchesOracleOn100By10) {
  std::mt19937_64 rng(35);
  const ClearDataset data = testing::RandomDataset(rng, 100, 10);
  const auto m = DealMatrix(100, 11, testing::DatasetWords(data));
  const auto out = RunParties<ShareMatrix>([&](Party& p) {
    const BinningResult r = Bin(p, m[p.index()], true);
    return InvBin(p, r.binned, *r.means);
  });
  const ShareMatrix o = Open(out);
  const auto clear = oracle::ClearBin(data, kFp, true);
  for (std::size_t r = 0; r < 100; ++r) {
    for (std::size_t g = 0; g < 10; ++g) {
      const int bin = clear.table.at(r, g);
      EXPECT_EQ(o.cells.a[r * 11 + g], clear.means[g][bin]);
    }
    EXPECT_EQ(o.cells.a[r * 11 + 10], static_cast<uint64_t>(data.labels[r]));
  }
}

}  // namespace
}  // namespace mpcsdg
