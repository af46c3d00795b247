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
#include <cstdint>
#include <functional>
#include <string>

#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

struct SessionOptions {
  uint64_t master_seed = 0;
  // When set, private randomness comes from the OS instead of the master
  // seed. Outputs stay the same; transcripts and shares do not.
  bool fresh_entropy = false;
  // key=value lines compared field by field during the handshake.
  std::string canonical_config;
};

// Private seed of a party when fresh_entropy is off.
Seed DeterministicPrivateSeed(uint64_t master_seed, int party);
// The pair key k_i a party draws first from its private stream.
Seed PairKeyFromPrivateSeed(const Seed& private_seed);

// Handshake: exchanges canonical configs with both peers and aborts with a
// SetupError naming the first differing field, then distributes pair keys
// and zeroes the ledger.
void Setup(Party& party, const SessionOptions& options);

// Three parties on threads connected by in-process channels. Each runs
// Setup and then `body`. If any party fails, all channels are closed and
// the root cause is rethrown: SetupError as is, anything else wrapped in a
// ProtocolAbort carrying the failing party's ledger.
void RunThreeParties(const std::array<FixedPointConfig, kNumParties>& fps,
                     const std::array<SessionOptions, kNumParties>& options,
                     const std::function<void(Party&)>& body);
void RunThreeParties(const FixedPointConfig& fp, const SessionOptions& options,
                     const std::function<void(Party&)>& body);
void RunThreeParties(const std::function<void(Party&)>& body);

}  // namespace mpcsdg
