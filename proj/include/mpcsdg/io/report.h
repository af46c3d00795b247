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

#include <map>
#include <string>

#include "json.hpp"
#include "mpcsdg/pipeline/orchestrator.h"
#include "mpcsdg/runtime/ledger.h"

namespace mpcsdg {

// Run report. `ledgers` maps 0-based party index to that party's ledger; a
// networked party reports only its own.
nlohmann::ordered_json BuildReport(const PipelineConfig& config,
                                   const PipelineOutcome& outcome,
                                   const std::map<int, CommLedger>& ledgers);

nlohmann::ordered_json LedgerJson(const CommLedger& ledger);

void WriteReport(const nlohmann::ordered_json& report, const std::string& path);

}  // namespace mpcsdg
