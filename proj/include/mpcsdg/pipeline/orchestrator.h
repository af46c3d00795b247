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
#include <optional>
#include <string>
#include <vector>

#include "mpcsdg/io/dataset_file.h"
#include "mpcsdg/pipeline/config.h"
#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/ledger.h"
#include "mpcsdg/runtime/party.h"
#include "mpcsdg/sdg/marginals.h"

namespace mpcsdg {

// What a custodian sends to one server: a single additive component of its
// dataset and thresholds. Shapes and column names are public.
struct CustodianUpload {
  std::vector<std::string> columns;  // gene names then "label"
  std::size_t rows = 0;
  Words cells;       // rows x columns, component of the encoded cells
  Words thresholds;  // [max_wle, min_accuracy], f bits
};

// One party's replicated view of a custodian's data.
struct CustodianShares {
  std::vector<std::string> columns;
  ShareMatrix data;     // genes f-bit fixed point, label integer
  ShareVec thresholds;  // [max_wle, min_accuracy], f bits
};

// Ring words of a dataset: genes encoded at f bits, labels as integers.
Words EncodeDatasetCells(const ClearDataset& data, const FixedPointConfig& fp);
// Threshold encoding; infinities and huge values are clamped into range.
uint64_t EncodeThreshold(double value, const FixedPointConfig& fp);
// Splits a custodian's dataset and thresholds into three additive
// components; element p goes to party p.
std::array<CustodianUpload, 3> ShareCustodianInput(const ClearDataset& data,
                                                   const Thresholds& thresholds,
                                                   const FixedPointConfig& fp,
                                                   Prg& rng);

// Completes the replication of the uploads: every party forwards its
// components to the previous party. One round under INPUT.
std::vector<CustodianShares> ReceiveUploads(
    Party& party, const std::vector<CustodianUpload>& uploads);

// Row-stacks custodian data in custodian order. No communication. Throws
// ParameterError naming the first column whose name differs.
ShareMatrix Concat(Party& party, const std::vector<CustodianShares>& uploads);

// Secret 0/1 that every custodian's bars are met by the averaged metrics
// (2f fractional bits). A metric equal to its threshold meets it.
ShareVec SecretVote(Party& party, const ShareVec& wle, const ShareVec& accuracy,
                    const std::vector<CustodianShares>& uploads);

// Noise stream context of the publish path.
inline constexpr uint64_t kPublishNoiseContext = ~uint64_t{0};

struct PipelineOutcome {
  bool publish = false;
  int loops = 0;
  // Index into the hyperparameter list and its value.
  std::optional<int> chosen_index;
  std::optional<int> chosen_value;
  // Opened vote bits, one per loop (first-pass mode).
  std::vector<uint64_t> vote_bits;
  std::size_t combined_rows = 0;
  std::size_t genes = 0;
  NoiseCalibration calibration;
  // This party's view of the de-binned synthetic data, when published.
  std::optional<ShareMatrix> synthetic;
};

// The full tuning loop and publish path, executed in lockstep by all three
// parties.
PipelineOutcome RunPipeline(Party& party,
                            const std::vector<CustodianUpload>& uploads,
                            const PipelineConfig& config);

struct BudgetReport {
  PrivacyBudget synthesis;
  PrivacyBudget preprocessing;
  double claimed_epsilon = 0;
  double claimed_delta = 0;
  NoiseCalibration per_measurement;
  std::string note;
};
BudgetReport MakeBudgetReport(const PipelineConfig& config, std::size_t genes);

// Cleartext dataset from reconstructed output words.
ClearDataset DecodeSynthetic(const Words& cells, std::size_t rows,
                             const std::vector<std::string>& gene_names,
                             const FixedPointConfig& fp);

struct LocalRun {
  PipelineOutcome outcome;  // party 1's view
  std::optional<ClearDataset> synthetic;
  std::array<CommLedger, 3> ledgers;
  std::array<std::vector<OpeningRecord>, 3> openings;
  std::array<std::vector<OpeningRecord>, 3> enclave_reveals;
};

// Custodians share their inputs, three in-process parties run the
// pipeline, and the custodians reconstruct the published data.
LocalRun RunLocal(const std::vector<ClearDataset>& datasets,
                  const std::vector<Thresholds>& thresholds,
                  const PipelineConfig& config);

}  // namespace mpcsdg
