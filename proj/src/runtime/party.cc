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


#include "mpcsdg/runtime/party.h"

#include <algorithm>

#include "mpcsdg/errors.h"

namespace mpcsdg {

namespace {

const char* StreamName(Stream s) {
  switch (s) {
    case Stream::kZero: return "zero";
    case Stream::kRand: return "rand";
    case Stream::kNoise: return "noise";
  }
  return "";
}

}  // namespace

Party::Party(int index, FixedPointConfig fp,
             std::array<std::shared_ptr<Channel>, kNumParties> peers)
    : index_(index), fp_(fp), peers_(std::move(peers)) {
  if (index < 0 || index >= kNumParties) {
    throw ParameterError("party index out of range");
  }
  fp_.Validate();
  last_switch_ = std::chrono::steady_clock::now();
}

Party::Scope::Scope(Party& party, Label label) : party_(party) {
  party_.Push(label);
}

Party::Scope::~Scope() { party_.Pop(); }

Label Party::current_label() const {
  return scopes_.empty() ? Label::kNone : scopes_.back();
}

void Party::ChargeElapsed() {
  const auto now = std::chrono::steady_clock::now();
  ledger_.At(current_label()).elapsed_ns += static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_switch_)
          .count());
  last_switch_ = now;
}

void Party::Push(Label label) {
  if (std::find(scopes_.begin(), scopes_.end(), label) != scopes_.end()) {
    throw AccountingError("label " + std::string(LabelName(label)) +
                          " is already open");
  }
  ChargeElapsed();
  scopes_.push_back(label);
}

void Party::Pop() {
  ChargeElapsed();
  scopes_.pop_back();
}

void Party::Send(int peer, const Words& payload) {
  if (peer == index_ || !peers_[peer]) {
    throw TransportError("no channel to party " + std::to_string(peer + 1));
  }
  TransportFrame frame{current_label(), send_seq_[peer]++, payload};
  peers_[peer]->Send(frame);
  LabelStats& s = ledger_.At(current_label());
  s.bytes_sent += 8 * payload.size();
  s.messages_sent += 1;
}

Words Party::Recv(int peer) {
  if (peer == index_ || !peers_[peer]) {
    throw TransportError("no channel to party " + std::to_string(peer + 1));
  }
  TransportFrame frame = peers_[peer]->Recv();
  if (frame.sequence != recv_seq_[peer]) {
    throw IntegrityError("out-of-order frame from party " +
                         std::to_string(peer + 1));
  }
  ++recv_seq_[peer];
  if (frame.label != current_label()) {
    throw IntegrityError("party " + std::to_string(peer + 1) + " is in " +
                         std::string(LabelName(frame.label)) + ", expected " +
                         std::string(LabelName(current_label())));
  }
  return std::move(frame.payload);
}

void Party::CountRound() { ledger_.At(current_label()).rounds += 1; }

void Party::CountOp(std::string_view op, uint64_t n) {
  ledger_.At(current_label()).op_counts[std::string(op)] += n;
}

void Party::InstallPrivateSeed(const Seed& seed) { private_prg_.emplace(seed); }

Prg& Party::private_prg() {
  if (!private_prg_) throw SetupError("private randomness not installed");
  return *private_prg_;
}

void Party::InstallPairKeys(const Seed& own, const Seed& next) {
  own_key_ = own;
  next_key_ = next;
  streams_.clear();
  for (Stream s : {Stream::kZero, Stream::kRand, Stream::kNoise}) {
    streams_.push_back({Prg(DeriveSeed(StreamName(s), own)),
                        Prg(DeriveSeed(StreamName(s), next))});
  }
  keyed_ = true;
}

Prg& Party::StreamPrg(Stream s, int which) {
  if (!keyed_) throw SetupError("correlated randomness before setup");
  return streams_[static_cast<int>(s)][which];
}

Words Party::ZeroShare(std::size_t n) {
  Words u = StreamPrg(Stream::kZero, 0).Next(n);
  const Words v = StreamPrg(Stream::kZero, 1).Next(n);
  for (std::size_t i = 0; i < n; ++i) u[i] -= v[i];
  return u;
}

Words Party::ZeroShareXor(std::size_t n) {
  Words u = StreamPrg(Stream::kZero, 0).Next(n);
  const Words v = StreamPrg(Stream::kZero, 1).Next(n);
  for (std::size_t i = 0; i < n; ++i) u[i] ^= v[i];
  return u;
}

std::pair<Words, Words> Party::Correlated(Stream stream, std::size_t n) {
  Words a = StreamPrg(stream, 0).Next(n);
  Words b = StreamPrg(stream, 1).Next(n);
  return {std::move(a), std::move(b)};
}

void Party::ReseedNoise(uint64_t a, uint64_t b) {
  if (!keyed_) throw SetupError("noise reseed before setup");
  auto& pair = streams_[static_cast<int>(Stream::kNoise)];
  pair[0] = Prg(DeriveSeed("noise", own_key_, a, b));
  pair[1] = Prg(DeriveSeed("noise", next_key_, a, b));
}

void Party::LogOpening(std::string what, Words values) {
  const std::size_t n = values.size();
  openings_.push_back({current_label(), std::move(what), n, std::move(values)});
}

void Party::LogCustodianOpening(std::string what, std::size_t count) {
  openings_.push_back({current_label(), std::move(what), count, {}});
}

void Party::LogEnclaveReveal(std::string what, std::size_t count) {
  enclave_reveals_.push_back({current_label(), std::move(what), count, {}});
}

void Party::ResetAccounting() {
  ledger_.Reset();
  openings_.clear();
  enclave_reveals_.clear();
  last_switch_ = std::chrono::steady_clock::now();
}

void Party::CloseChannels() {
  for (auto& c : peers_) {
    if (c) c->Close();
  }
}

}  // namespace mpcsdg
