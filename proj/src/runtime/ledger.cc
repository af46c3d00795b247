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


#include "mpcsdg/runtime/ledger.h"

#include <sstream>

namespace mpcsdg {

uint64_t LabelStats::ops(const std::string& name) const {
  const auto it = op_counts.find(name);
  return it == op_counts.end() ? 0 : it->second;
}

bool LabelStats::SameTraffic(const LabelStats& o) const {
  return bytes_sent == o.bytes_sent && messages_sent == o.messages_sent &&
         rounds == o.rounds && op_counts == o.op_counts;
}

LabelStats CommLedger::Get(Label label) const {
  const auto it = stats_.find(label);
  return it == stats_.end() ? LabelStats{} : it->second;
}

uint64_t CommLedger::TotalBytes() const {
  uint64_t t = 0;
  for (const auto& [l, s] : stats_) t += s.bytes_sent;
  return t;
}

uint64_t CommLedger::TotalRounds() const {
  uint64_t t = 0;
  for (const auto& [l, s] : stats_) t += s.rounds;
  return t;
}

CommLedger CommLedger::Since(const CommLedger& before) const {
  CommLedger out;
  for (const auto& [label, s] : stats_) {
    const LabelStats b = before.Get(label);
    LabelStats d;
    d.bytes_sent = s.bytes_sent - b.bytes_sent;
    d.messages_sent = s.messages_sent - b.messages_sent;
    d.rounds = s.rounds - b.rounds;
    d.elapsed_ns = s.elapsed_ns - b.elapsed_ns;
    for (const auto& [op, n] : s.op_counts) {
      const uint64_t delta = n - b.ops(op);
      if (delta != 0) d.op_counts[op] = delta;
    }
    if (d.bytes_sent || d.messages_sent || d.rounds || d.elapsed_ns ||
        !d.op_counts.empty()) {
      out.stats_[label] = d;
    }
  }
  return out;
}

bool CommLedger::SameTraffic(const CommLedger& other) const {
  for (Label l : kAllLabels) {
    if (!Get(l).SameTraffic(other.Get(l))) return false;
  }
  return true;
}

std::string CommLedger::Dump() const {
  std::ostringstream os;
  for (const auto& [label, s] : stats_) {
    os << LabelName(label) << ": bytes=" << s.bytes_sent
       << " messages=" << s.messages_sent << " rounds=" << s.rounds
       << " ms=" << s.elapsed_ns / 1000000;
    for (const auto& [op, n] : s.op_counts) os << ' ' << op << '=' << n;
    os << '\n';
  }
  return os.str();
}

}  // namespace mpcsdg
