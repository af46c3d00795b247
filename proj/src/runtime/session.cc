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


#include "mpcsdg/runtime/session.h"

#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "mpcsdg/errors.h"

namespace mpcsdg {

Seed DeterministicPrivateSeed(uint64_t master_seed, int party) {
  return SeedFromMaster(master_seed, "party", static_cast<uint64_t>(party));
}

Seed PairKeyFromPrivateSeed(const Seed& private_seed) {
  Prg prg(private_seed);
  return prg.NextSeed();
}

namespace {

std::map<std::string, std::string> ParseCanonical(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

void CompareConfigs(const std::string& mine, const std::string& theirs,
                    int peer) {
  const auto a = ParseCanonical(mine);
  const auto b = ParseCanonical(theirs);
  for (const auto& [key, value] : a) {
    const auto it = b.find(key);
    if (it == b.end() || it->second != value) {
      throw SetupError("config mismatch with party " + std::to_string(peer + 1) +
                       " on field '" + key + "'");
    }
  }
  for (const auto& [key, value] : b) {
    if (!a.count(key)) {
      throw SetupError("config mismatch with party " + std::to_string(peer + 1) +
                       " on field '" + key + "'");
    }
  }
}

Seed OsSeed() {
  std::random_device rd;
  Seed s;
  for (auto& byte : s) byte = static_cast<uint8_t>(rd());
  return s;
}

}  // namespace

void Setup(Party& party, const SessionOptions& options) {
  {
    Party::Scope scope(party, Label::kSetup);
    const std::string canonical =
        "frac_bits=" + std::to_string(party.frac_bits()) + "\n" +
        options.canonical_config;
    const Words packed = PackString(canonical);
    party.Send(party.next(), packed);
    party.Send(party.prev(), packed);
    for (int peer : {party.next(), party.prev()}) {
      const Words got = party.Recv(peer);
      std::size_t offset = 0;
      CompareConfigs(canonical, UnpackString(got, offset), peer);
    }
    party.CountRound();

    const Seed priv = options.fresh_entropy
                          ? OsSeed()
                          : DeterministicPrivateSeed(options.master_seed,
                                                     party.index());
    party.InstallPrivateSeed(priv);
    const Seed own = party.private_prg().NextSeed();
    Words key_words(2, 0);
    for (int i = 0; i < 16; ++i) {
      key_words[i / 8] |= uint64_t{own[i]} << (8 * (i % 8));
    }
    party.Send(party.prev(), key_words);
    const Words theirs = party.Recv(party.next());
    if (theirs.size() != 2) throw SetupError("malformed key message");
    Seed next;
    for (int i = 0; i < 16; ++i) {
      next[i] = static_cast<uint8_t>(theirs[i / 8] >> (8 * (i % 8)));
    }
    party.InstallPairKeys(own, next);
    party.CountRound();
  }
  party.ResetAccounting();
}

void RunThreeParties(const std::array<FixedPointConfig, kNumParties>& fps,
                     const std::array<SessionOptions, kNumParties>& options,
                     const std::function<void(Party&)>& body) {
  std::array<std::array<std::shared_ptr<Channel>, kNumParties>, kNumParties>
      links{};
  for (int i = 0; i < kNumParties; ++i) {
    for (int j = i + 1; j < kNumParties; ++j) {
      auto [a, b] = MakeInProcessPair();
      links[i][j] = a;
      links[j][i] = b;
    }
  }
  std::vector<std::unique_ptr<Party>> parties;
  for (int i = 0; i < kNumParties; ++i) {
    parties.push_back(std::make_unique<Party>(i, fps[i], links[i]));
  }

  std::mutex mu;
  std::exception_ptr root;
  int root_party = -1;
  bool root_is_transport = false;
  std::string root_ledger;

  auto fail_all = [&] {
    for (auto& p : parties) p->CloseChannels();
  };

  std::vector<std::thread> threads;
  for (int i = 0; i < kNumParties; ++i) {
    threads.emplace_back([&, i] {
      Party& party = *parties[i];
      try {
        Setup(party, options[i]);
        body(party);
      } catch (...) {
        bool transport = false;
        try {
          throw;
        } catch (const TransportError&) {
          transport = true;
        } catch (...) {
        }
        {
          std::lock_guard<std::mutex> lock(mu);
          if (!root || (root_is_transport && !transport)) {
            root = std::current_exception();
            root_party = i;
            root_is_transport = transport;
            root_ledger = party.ledger().Dump();
          }
        }
        fail_all();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (!root) return;
  try {
    std::rethrow_exception(root);
  } catch (const SetupError&) {
    throw;
  } catch (const ProtocolAbort&) {
    throw;
  } catch (const std::exception& e) {
    throw ProtocolAbort("party " + std::to_string(root_party + 1) + ": " +
                            e.what(),
                        root_ledger);
  }
}

void RunThreeParties(const FixedPointConfig& fp, const SessionOptions& options,
                     const std::function<void(Party&)>& body) {
  RunThreeParties({fp, fp, fp}, {options, options, options}, body);
}

void RunThreeParties(const std::function<void(Party&)>& body) {
  RunThreeParties(FixedPointConfig{}, SessionOptions{}, body);
}

}  // namespace mpcsdg
