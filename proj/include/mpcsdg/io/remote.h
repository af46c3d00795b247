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
#include <vector>

#include "mpcsdg/io/dataset_file.h"
#include "mpcsdg/pipeline/orchestrator.h"
#include "mpcsdg/runtime/tcp_channel.h"

namespace mpcsdg {

// First frame on every connection: who is dialing.
enum class PeerKind : uint64_t { kParty = 0, kCustodian = 1 };

Words PackUpload(const CustodianUpload& upload);
CustodianUpload UnpackUpload(const Words& words);

struct PartyServerOptions {
  int index = 0;  // 0-based
  // Bound listener; created from `listen` when null.
  std::shared_ptr<TcpListener> listener;
  Endpoint listen;
  // Addresses of the parties with lower index, in index order. Higher
  // parties dial this one.
  std::vector<Endpoint> lower_peers;
  PipelineConfig config;
  std::chrono::milliseconds timeout{30000};
};

struct PartyServerResult {
  PipelineOutcome outcome;
  CommLedger ledger;
  std::vector<OpeningRecord> openings;
};

// Connects to the other parties and runs the handshake before accepting any
// custodian data, then collects the custodian uploads, runs the pipeline and returns every custodian its share
// view of the output. Connection and handshake failures raise
// TransportError or SetupError; failures after the handshake raise
// ProtocolAbort.
PartyServerResult RunPartyServer(const PartyServerOptions& options);

struct CustodianOptions {
  int id = 1;  // 1-based custodian position
  ClearDataset data;
  Thresholds thresholds;
  std::array<Endpoint, 3> servers;
  PipelineConfig config;  // seed and fixed-point settings
  std::chrono::milliseconds timeout{30000};
};

// Shares the dataset to the three parties and waits for the result.
// Returns nullopt on a no-publish decision.
std::optional<ClearDataset> RunCustodian(const CustodianOptions& options);

}  // namespace mpcsdg
