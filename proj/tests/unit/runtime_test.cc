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

#include <set>

#include "harness.h"
#include "mpcsdg/errors.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/runtime/channel.h"
#include "mpcsdg/runtime/frame.h"
#include "mpcsdg/runtime/ledger.h"
#include "mpcsdg/runtime/prg.h"
#include "mpcsdg/runtime/session.h"

namespace mpcsdg {
namespace {

using testing::Deal;
using testing::RunParties;

TEST(Frame, SerializeLayout) {
  TransportFrame f{Label::kSort, 0x0102030405060708ULL, {0x1122334455667788ULL}};
  const auto bytes = SerializeFrame(f);
  ASSERT_EQ(bytes.size(), kFrameHeaderBytes + 8);
  // Length of everything after the 4-byte length, big-endian.
  EXPECT_EQ(bytes[0], 0);
  EXPECT_EQ(bytes[3], 2 + 8 + 8);
  // Label id, big-endian.
  EXPECT_EQ(bytes[4], 0);
  EXPECT_EQ(bytes[5], static_cast<uint8_t>(Label::kSort));
  // Sequence, big-endian.
  EXPECT_EQ(bytes[6], 0x01);
  EXPECT_EQ(bytes[13], 0x08);
  // Payload word, little-endian.
  EXPECT_EQ(bytes[14], 0x88);
  EXPECT_EQ(bytes[21], 0x11);
  const TransportFrame back = ParseFrameBody(bytes.data() + 4, bytes.size() - 4);
  EXPECT_EQ(back.label, f.label);
  EXPECT_EQ(back.sequence, f.sequence);
  EXPECT_EQ(back.payload, f.payload);
}

TEST(Frame, MalformedBodyIsIntegrityError) {
  const uint8_t junk[5] = {0, 1, 2, 3, 4};
  EXPECT_THROW(ParseFrameBody(junk, 5), IntegrityError);
  uint8_t bad_label[10] = {0xff, 0xff};
  EXPECT_THROW(ParseFrameBody(bad_label, 10), IntegrityError);
}

TEST(Frame, PackStringRoundTrip) {
  for (std::string s : {"", "a", "exactly8", "frac_bits=16\nseed=3\n"}) {
    std::size_t off = 0;
    EXPECT_EQ(UnpackString(PackString(s), off), s);
  }
}

TEST(Frame, LabelNames) {
  std::set<std::string> names;
  for (Label l : kAllLabels) names.insert(std::string(LabelName(l)));
  EXPECT_EQ(names.size(), std::size(kAllLabels));
  EXPECT_EQ(LabelName(Label::kNoisyMarg), "NOISY-MARG");
  EXPECT_EQ(LabelName(Label::kInvBin), "INV-BIN");
}

TEST(Channel, FifoUnderInterleaving) {
  auto [a, b] = MakeInProcessPair();
  for (uint64_t i = 0; i < 100; ++i) {
    a->Send({Label::kNone, i, {i}});
    if (i % 3 == 0) b->Send({Label::kNone, i, {i + 1000}});
  }
  for (uint64_t i = 0; i < 100; ++i) EXPECT_EQ(b->Recv().payload[0], i);
  for (uint64_t i = 0; i < 100; i += 3) EXPECT_EQ(a->Recv().payload[0], i + 1000);
}

TEST(Channel, ClosedQueueThrows) {
  auto [a, b] = MakeInProcessPair();
  a->Close();
  EXPECT_THROW(b->Recv(), TransportError);
}

TEST(Prg, DeterministicAndDistinct) {
  Prg a(SeedFromMaster(42, "x")), b(SeedFromMaster(42, "x")), c(SeedFromMaster(42, "y"));
  const Words wa = a.Next(10), wb = b.Next(10), wc = c.Next(10);
  EXPECT_EQ(wa, wb);
  EXPECT_NE(wa, wc);
  EXPECT_NE(SeedFromMaster(1, "x", 0, 1), SeedFromMaster(1, "x", 1, 0));
  EXPECT_NE(DeriveWord(1, "sdg", 0, 1), DeriveWord(1, "sdg", 1, 0));
}

TEST(Prg, StreamIsPrefixStable) {
  Prg a(SeedFromMaster(3, "s")), b(SeedFromMaster(3, "s"));
  Words first = a.Next(3);
  const Words rest = a.Next(5);
  first.insert(first.end(), rest.begin(), rest.end());
  EXPECT_EQ(first, b.Next(8));
}

TEST(Prg, UniformInRange) {
  Prg p(SeedFromMaster(4, "u"));
  for (int i = 0; i < 1000; ++i) EXPECT_LT(p.Uniform(7), 7u);
}

TEST(Setup, LedgerZeroAfterHandshake) {
  const auto ledgers = RunParties<CommLedger>([](Party& p) { return p.ledger(); });
  for (const auto& l : ledgers) {
    EXPECT_EQ(l.TotalBytes(), 0u);
    EXPECT_EQ(l.TotalRounds(), 0u);
  }
}

TEST(Setup, MismatchedFracBitsNamesField) {
  SessionOptions o;
  try {
    RunThreeParties({FixedPointConfig{16}, FixedPointConfig{16}, FixedPointConfig{12}},
                    {o, o, o}, [](Party&) {});
    FAIL() << "expected SetupError";
  } catch (const SetupError& e) {
    EXPECT_NE(std::string(e.what()).find("frac_bits"), std::string::npos);
  }
}

TEST(Setup, MismatchedConfigFieldIsNamed) {
  SessionOptions a, b;
  a.canonical_config = "folds=5\nseed=1\n";
  b.canonical_config = "folds=5\nseed=2\n";
  try {
    RunThreeParties({FixedPointConfig{}, FixedPointConfig{}, FixedPointConfig{}},
                    {a, a, b}, [](Party&) {});
    FAIL() << "expected SetupError";
  } catch (const SetupError& e) {
    EXPECT_NE(std::string(e.what()).find("seed"), std::string::npos);
  }
}

TEST(Ledger, SendOfHundredWordsIsEightHundredBytes) {
  const auto ledgers = RunParties<CommLedger>([](Party& p) {
    Party::Scope s(p, Label::kInput);
    p.Send(p.next(), Words(100, 1));
    p.Recv(p.prev());
    return p.ledger();
  });
  for (const auto& l : ledgers) {
    EXPECT_EQ(l.Get(Label::kInput).bytes_sent, 800u);
    EXPECT_EQ(l.Get(Label::kInput).messages_sent, 1u);
  }
}

TEST(Ledger, InnermostLabelIsCharged) {
  const auto x = Deal({1}), y = Deal({2}, 3);
  const auto ledgers = RunParties<CommLedger>([&](Party& p) {
    Party::Scope outer(p, Label::kEval);
    Mul(p, x[p.index()], y[p.index()]);
    {
      Party::Scope inner(p, Label::kLr);
      Mul(p, x[p.index()], y[p.index()]);
      Mul(p, x[p.index()], y[p.index()]);
    }
    return p.ledger();
  });
  for (const auto& l : ledgers) {
    EXPECT_EQ(l.Get(Label::kEval).bytes_sent, 8u);
    EXPECT_EQ(l.Get(Label::kLr).bytes_sent, 16u);
    EXPECT_EQ(l.Get(Label::kLr).rounds, 2u);
    EXPECT_EQ(l.TotalBytes(), 24u);
  }
}

TEST(Ledger, NestedIdenticalLabelIsAccountingError) {
  EXPECT_THROW(RunThreeParties([](Party& p) {
                 Party::Scope a(p, Label::kBin);
                 Party::Scope b(p, Label::kBin);
               }),
               ProtocolAbort);
  try {
    RunThreeParties([](Party& p) {
      Party::Scope a(p, Label::kBin);
      Party::Scope b(p, Label::kBin);
    });
  } catch (const ProtocolAbort& e) {
    EXPECT_NE(std::string(e.what()).find("BIN"), std::string::npos);
  }
}

TEST(Ledger, SinceAndSameTraffic) {
  CommLedger a;
  a.At(Label::kSort).bytes_sent = 10;
  CommLedger b = a;
  b.At(Label::kSort).bytes_sent = 25;
  b.At(Label::kLr).rounds = 2;
  const CommLedger d = b.Since(a);
  EXPECT_EQ(d.Get(Label::kSort).bytes_sent, 15u);
  EXPECT_EQ(d.Get(Label::kLr).rounds, 2u);
  EXPECT_TRUE(a.SameTraffic(a));
  EXPECT_FALSE(a.SameTraffic(b));
  EXPECT_NE(b.Dump().find("SORT"), std::string::npos);
}

TEST(Runtime, AbortCarriesLedgerSnapshot) {
  const auto x = Deal({1}), y = Deal({2}, 3);
  try {
    RunThreeParties([&](Party& p) {
      Party::Scope s(p, Label::kWle);
      Mul(p, x[p.index()], y[p.index()]);
      if (p.index() == 1) throw std::runtime_error("boom");
      Mul(p, x[p.index()], y[p.index()]);
    });
    FAIL() << "expected ProtocolAbort";
  } catch (const ProtocolAbort& e) {
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("party 2"), std::string::npos);
    EXPECT_NE(e.ledger_snapshot().find("WLE"), std::string::npos);
  }
}

TEST(Runtime, LabelMismatchIsIntegrityError) {
  try {
    RunThreeParties([](Party& p) {
      Party::Scope s(p, p.index() == 0 ? Label::kSort : Label::kBin);
      p.Send(p.next(), {1});
      p.Recv(p.prev());
    });
    FAIL();
  } catch (const ProtocolAbort& e) {
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
  }
}

TEST(Runtime, SameSeedSameTranscript) {
  const auto x = Deal({5, 6, 7}), y = Deal({8, 9, 10}, 4);
  auto run = [&] {
    return RunParties<std::pair<Words, CommLedger>>(
        [&](Party& p) {
          ShareVec z = Mul(p, x[p.index()], y[p.index()]);
          Words view = z.a;
          view.insert(view.end(), z.b.begin(), z.b.end());
          return std::make_pair(view, p.ledger());
        },
        {}, 42);
  };
  const auto a = run(), b = run();
  for (int p = 0; p < 3; ++p) {
    EXPECT_EQ(a[p].first, b[p].first);
    EXPECT_TRUE(a[p].second.SameTraffic(b[p].second));
  }
}

TEST(Runtime, FreshEntropyChangesSharesNotResults) {
  const auto x = Deal({5}), y = Deal({8}, 4);
  SessionOptions o;
  o.fresh_entropy = true;
  std::array<ShareVec, 3> views;
  RunThreeParties({}, o, [&](Party& p) {
    views[p.index()] = Mul(p, x[p.index()], y[p.index()]);
  });
  EXPECT_EQ(Reconstruct(views), Words{40});
}

}  // namespace
}  // namespace mpcsdg
