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
#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcsdg/ring/fixed_point.h"
#include "mpcsdg/runtime/channel.h"
#include "mpcsdg/runtime/ledger.h"
#include "mpcsdg/runtime/prg.h"

namespace mpcsdg {

inline constexpr int kNumParties = 3;

// A value made public to the computing parties (or to the custodians).
struct OpeningRecord {
  Label label = Label::kNone;
  std::string what;
  std::size_t count = 0;
  // Empty for enclave reveals, which are not public.
  Words values;
};

// Correlated randomness streams. Party i holds the streams keyed by k_i and
// k_{i+1}; every key is shared by exactly two parties.
enum class Stream { kZero, kRand, kNoise };

// One computing server. Indices are 0-based internally; reports print them
// as 1..3.
class Party {
 public:
  Party(int index, FixedPointConfig fp,
        std::array<std::shared_ptr<Channel>, kNumParties> peers);

  int index() const { return index_; }
  int next() const { return (index_ + 1) % kNumParties; }
  int prev() const { return (index_ + 2) % kNumParties; }
  const FixedPointConfig& fp() const { return fp_; }
  int frac_bits() const { return fp_.frac_bits; }

  // Accounting scope. Traffic goes to the innermost open label; opening a
  // label that is already open throws AccountingError.
  class Scope {
   public:
    Scope(Party& party, Label label);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Party& party_;
  };
  Label current_label() const;

  void Send(int peer, const Words& payload);
  Words Recv(int peer);
  void CountRound();
  void CountOp(std::string_view op, uint64_t n = 1);

  // Key material. Setup installs the private seed and the pair keys.
  void InstallPrivateSeed(const Seed& seed);
  void InstallPairKeys(const Seed& own, const Seed& next);
  Prg& private_prg();
  bool keyed() const { return keyed_; }

  // u_i with u_0 + u_1 + u_2 == 0.
  Words ZeroShare(std::size_t n);
  // Boolean version: XOR of the three parties' outputs is zero.
  Words ZeroShareXor(std::size_t n);
  // (F(k_i), F(k_{i+1})) on the given stream.
  std::pair<Words, Words> Correlated(Stream stream, std::size_t n);
  // Restarts the noise streams at a public context so a cleartext mirror can
  // reproduce them.
  void ReseedNoise(uint64_t a, uint64_t b);

  void LogOpening(std::string what, Words values);
  // Output handed to the custodians: public to them, never seen in the clear
  // by any party.
  void LogCustodianOpening(std::string what, std::size_t count);
  const std::vector<OpeningRecord>& openings() const { return openings_; }
  void LogEnclaveReveal(std::string what, std::size_t count);
  const std::vector<OpeningRecord>& enclave_reveals() const {
    return enclave_reveals_;
  }

  CommLedger& ledger() { return ledger_; }
  const CommLedger& ledger() const { return ledger_; }
  // Clears counters and logs after setup.
  void ResetAccounting();

  void CloseChannels();

 private:
  friend class Scope;
  void Push(Label label);
  void Pop();
  void ChargeElapsed();
  Prg& StreamPrg(Stream s, int which);

  int index_;
  FixedPointConfig fp_;
  std::array<std::shared_ptr<Channel>, kNumParties> peers_;
  std::array<uint64_t, kNumParties> send_seq_{};
  std::array<uint64_t, kNumParties> recv_seq_{};

  std::vector<Label> scopes_;
  std::chrono::steady_clock::time_point last_switch_;
  CommLedger ledger_;

  bool keyed_ = false;
  std::optional<Prg> private_prg_;
  Seed own_key_{};
  Seed next_key_{};
  // [stream][0 = own key, 1 = next key]
  std::vector<std::array<Prg, 2>> streams_;

  std::vector<OpeningRecord> openings_;
  std::vector<OpeningRecord> enclave_reveals_;
};

}  // namespace mpcsdg
