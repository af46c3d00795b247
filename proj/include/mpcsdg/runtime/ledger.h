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

#include <cstdint>
#include <map>
#include <string>

#include "mpcsdg/runtime/frame.h"

namespace mpcsdg {

struct LabelStats {
  uint64_t bytes_sent = 0;
  uint64_t messages_sent = 0;
  uint64_t rounds = 0;
  uint64_t elapsed_ns = 0;
  // Element counts per primitive, e.g. "lt" -> number of comparisons.
  std::map<std::string, uint64_t> op_counts;

  uint64_t ops(const std::string& name) const;
  // Equal traffic and op counts; elapsed time is ignored.
  bool SameTraffic(const LabelStats& other) const;
};

// Per-label communication accounting for one party. Counters only grow
// between resets.
class CommLedger {
 public:
  LabelStats& At(Label label) { return stats_[label]; }
  // Zero stats for labels never touched.
  LabelStats Get(Label label) const;

  const std::map<Label, LabelStats>& stats() const { return stats_; }
  uint64_t TotalBytes() const;
  uint64_t TotalRounds() const;
  void Reset() { stats_.clear(); }

  // Traffic of `this` minus `before`, per label.
  CommLedger Since(const CommLedger& before) const;
  bool SameTraffic(const CommLedger& other) const;

  std::string Dump() const;

 private:
  std::map<Label, LabelStats> stats_;
};

}  // namespace mpcsdg
