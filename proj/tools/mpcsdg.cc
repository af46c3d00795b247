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


// Command-line entry points: run-local, party and custodian.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpcsdg/errors.h"
#include "mpcsdg/io/config_file.h"
#include "mpcsdg/io/dataset_file.h"
#include "mpcsdg/io/remote.h"
#include "mpcsdg/io/report.h"
#include "mpcsdg/pipeline/orchestrator.h"

namespace {

using namespace mpcsdg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAbort = 3;
constexpr int kExitConnect = 4;

struct Common {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> mode;
  std::string report_path;

  PipelineConfig Load() const {
    PipelineConfig c =
        config_path.empty() ? PipelineConfig{} : ReadConfig(config_path);
    if (seed) c.seed = *seed;
    if (mode) c.mode = ParseSearchMode(*mode);
    return c;
  }
};

void AddCommon(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "key = value config file");
  app->add_option("--seed", c.seed, "master public seed (overrides config)");
  app->add_option("--mode", c.mode, "first-pass or exhaustive");
  app->add_option("--report", c.report_path, "JSON run report path");
}

void EmitReport(const nlohmann::ordered_json& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    WriteReport(report, path);
  }
}

std::vector<Thresholds> LoadThresholds(const std::vector<std::string>& paths,
                                       std::size_t custodians) {
  if (paths.size() != 1 && paths.size() != custodians) {
    throw ParameterError("give one --thresholds file or one per --data file");
  }
  std::vector<Thresholds> out;
  for (std::size_t c = 0; c < custodians; ++c) {
    out.push_back(ReadThresholds(paths[paths.size() == 1 ? 0 : c]));
  }
  return out;
}

template <typename F>
int Guard(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParameterError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ProtocolAbort& e) {
    std::cerr << "protocol abort: " << e.what() << '\n'
              << e.ledger_snapshot() << '\n';
    return kExitAbort;
  } catch (const SetupError& e) {
    std::cerr << "connectivity error: " << e.what() << '\n';
    return kExitConnect;
  } catch (const TransportError& e) {
    std::cerr << "connectivity error: " << e.what() << '\n';
    return kExitConnect;
  } catch (const std::exception& e) {
    std::cerr << "protocol abort: " << e.what() << '\n';
    return kExitAbort;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure synthetic data generation across three servers"};
  app.require_subcommand(1);

  Common local_common;
  std::vector<std::string> local_data, local_thresholds;
  std::string local_out;
  auto* local = app.add_subcommand(
      "run-local", "three in-process parties and all custodians");
  AddCommon(local, local_common);
  local->add_option("--data", local_data, "custodian dataset (repeatable)")
      ->required();
  local->add_option("--thresholds", local_thresholds,
                    "thresholds file, one shared or one per dataset")
      ->required();
  local->add_option("--out", local_out, "synthetic dataset output path");

  Common party_common;
  int party_id = 0;
  std::string party_listen;
  std::vector<std::string> party_peers;
  int party_timeout_ms = 30000;
  auto* party = app.add_subcommand("party", "one computing server over TCP");
  AddCommon(party, party_common);
  party->add_option("--id", party_id, "server id 1..3")->required();
  party->add_option("--listen", party_listen, "host:port to accept on")
      ->required();
  party->add_option("--peer", party_peers,
                    "address of each lower-numbered server, in id order");
  party->add_option("--timeout-ms", party_timeout_ms, "handshake timeout");

  Common cust_common;
  int cust_id = 1;
  std::string cust_data, cust_thresholds, cust_out;
  std::vector<std::string> cust_servers;
  int cust_timeout_ms = 30000;
  auto* cust = app.add_subcommand("custodian", "share a dataset to the servers");
  AddCommon(cust, cust_common);
  cust->add_option("--id", cust_id, "custodian position 1..n");
  cust->add_option("--data", cust_data, "dataset")->required();
  cust->add_option("--thresholds", cust_thresholds, "thresholds file")
      ->required();
  cust->add_option("--servers", cust_servers, "three server addresses")
      ->required()
      ->expected(3);
  cust->add_option("--out", cust_out, "where to write the revealed dataset");
  cust->add_option("--timeout-ms", cust_timeout_ms, "connection timeout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (local->parsed()) {
    return Guard([&] {
      PipelineConfig config = local_common.Load();
      std::vector<ClearDataset> datasets;
      for (const auto& p : local_data) datasets.push_back(ReadDataset(p));
      config.n_custodians = static_cast<int>(datasets.size());
      const auto thresholds = LoadThresholds(local_thresholds, datasets.size());
      const LocalRun run = RunLocal(datasets, thresholds, config);
      std::map<int, CommLedger> ledgers;
      for (int p = 0; p < 3; ++p) ledgers[p] = run.ledgers[p];
      EmitReport(BuildReport(config, run.outcome, ledgers),
                 local_common.report_path);
      if (run.synthetic && !local_out.empty()) {
        WriteDataset(*run.synthetic, local_out);
      }
      std::cerr << "decision: "
                << (run.outcome.publish ? "publish" : "no-publish") << '\n';
      return kExitOk;
    });
  }

  if (party->parsed()) {
    return Guard([&] {
      PartyServerOptions opt;
      opt.config = party_common.Load();
      if (party_id < 1 || party_id > 3) {
        throw ParameterError("--id must be 1, 2 or 3");
      }
      opt.index = party_id - 1;
      opt.listen = Endpoint::Parse(party_listen);
      for (const auto& p : party_peers) opt.lower_peers.push_back(Endpoint::Parse(p));
      opt.timeout = std::chrono::milliseconds(party_timeout_ms);
      const PartyServerResult r = RunPartyServer(opt);
      EmitReport(BuildReport(opt.config, r.outcome, {{opt.index, r.ledger}}),
                 party_common.report_path);
      return kExitOk;
    });
  }

  return Guard([&] {
    CustodianOptions opt;
    opt.config = cust_common.Load();
    opt.id = cust_id;
    opt.data = ReadDataset(cust_data);
    opt.thresholds = ReadThresholds(cust_thresholds);
    for (int p = 0; p < 3; ++p) opt.servers[p] = Endpoint::Parse(cust_servers[p]);
    opt.timeout = std::chrono::milliseconds(cust_timeout_ms);
    const auto result = RunCustodian(opt);
    if (!result) {
      std::cerr << "decision: no-publish\n";
      return kExitOk;
    }
    if (!cust_out.empty()) WriteDataset(*result, cust_out);
    std::cerr << "decision: publish, " << result->rows() << " rows\n";
    return kExitOk;
  });
}
