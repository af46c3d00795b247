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


#include "mpcsdg/io/report.h"

#include <fstream>
#include <sstream>

#include "mpcsdg/errors.h"

namespace mpcsdg {

using nlohmann::ordered_json;

ordered_json LedgerJson(const CommLedger& ledger) {
  ordered_json out = ordered_json::object();
  for (Label label : kAllLabels) {
    const LabelStats s = ledger.Get(label);
    ordered_json entry;
    entry["bytes"] = s.bytes_sent;
    entry["messages"] = s.messages_sent;
    entry["rounds"] = s.rounds;
    entry["ms"] = static_cast<double>(s.elapsed_ns) / 1e6;
    out[std::string(LabelName(label))] = entry;
  }
  return out;
}

ordered_json BuildReport(const PipelineConfig& config,
                         const PipelineOutcome& outcome,
                         const std::map<int, CommLedger>& ledgers) {
  ordered_json r;
  r["decision"] = outcome.publish ? "publish" : "no-publish";
  r["H_s"] = outcome.chosen_value ? ordered_json(*outcome.chosen_value)
                                  : ordered_json(nullptr);
  r["loops"] = outcome.loops;
  r["mode"] = SearchModeName(config.mode);
  r["vote_bits"] = outcome.vote_bits;
  r["combined_rows"] = outcome.combined_rows;
  r["genes"] = outcome.genes;
  r["published_rows"] =
      outcome.synthetic ? outcome.synthetic->rows : std::size_t{0};

  const BudgetReport b = MakeBudgetReport(config, outcome.genes);
  ordered_json budget;
  budget["synthesis"] = {{"epsilon", b.synthesis.epsilon},
                         {"delta", b.synthesis.delta}};
  budget["preprocessing"] = {{"epsilon", b.preprocessing.epsilon},
                             {"delta", b.preprocessing.delta},
                             {"consumed", false}};
  budget["claimed"] = {{"epsilon", b.claimed_epsilon},
                       {"delta", b.claimed_delta}};
  budget["measurements"] = b.per_measurement.measurements;
  budget["per_measurement"] = {{"epsilon", b.per_measurement.epsilon_q},
                               {"delta", b.per_measurement.delta_q},
                               {"sigma", b.per_measurement.sigma}};
  budget["note"] = b.note;
  r["budget"] = budget;

  ordered_json parties = ordered_json::object();
  for (const auto& [index, ledger] : ledgers) {
    ordered_json p;
    p["total_bytes"] = ledger.TotalBytes();
    p["total_rounds"] = ledger.TotalRounds();
    p["labels"] = LedgerJson(ledger);
    parties[std::to_string(index + 1)] = p;
  }
  r["parties"] = parties;

  ordered_json cfg;
  cfg["frac_bits"] = config.fp.frac_bits;
  std::istringstream lines(config.Canonical());
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find('=');
    cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  r["config"] = cfg;
  return r;
}

void WriteReport(const ordered_json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write report to " + path);
  out << report.dump(2) << '\n';
}

}  // namespace mpcsdg
