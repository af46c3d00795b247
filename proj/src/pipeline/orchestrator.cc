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


#include "mpcsdg/pipeline/orchestrator.h"

#include <cmath>

#include "mpcsdg/errors.h"
#include "mpcsdg/eval/evaluate.h"
#include "mpcsdg/pipeline/folds.h"
#include "mpcsdg/preprocess/binning.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/primitives/random.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/runtime/session.h"
#include "mpcsdg/sdg/bridge.h"

namespace mpcsdg {

Words EncodeDatasetCells(const ClearDataset& data, const FixedPointConfig& fp) {
  const std::size_t d = data.d();
  Words cells(data.rows() * (d + 1));
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t g = 0; g < d; ++g) {
      cells[r * (d + 1) + g] = Encode(data.gene(r, g), fp).word;
    }
    cells[r * (d + 1) + d] = static_cast<uint64_t>(data.labels[r]);
  }
  return cells;
}

uint64_t EncodeThreshold(double value, const FixedPointConfig& fp) {
  const double limit = fp.MaxMagnitude() / 2;
  if (std::isnan(value)) throw ParameterError("threshold is not a number");
  return Encode(std::clamp(value, -limit, limit), fp).word;
}

std::array<CustodianUpload, 3> ShareCustodianInput(const ClearDataset& data,
                                                   const Thresholds& thresholds,
                                                   const FixedPointConfig& fp,
                                                   Prg& rng) {
  const auto cells = ShareValues(EncodeDatasetCells(data, fp), rng);
  const auto th = ShareValues({EncodeThreshold(thresholds.max_wle, fp),
                               EncodeThreshold(thresholds.min_accuracy, fp)},
                              rng);
  std::vector<std::string> columns = data.gene_names;
  columns.push_back("label");
  std::array<CustodianUpload, 3> out;
  for (int p = 0; p < 3; ++p) {
    out[p].columns = columns;
    out[p].rows = data.rows();
    out[p].cells = cells[p].a;
    out[p].thresholds = th[p].a;
  }
  return out;
}

std::vector<CustodianShares> ReceiveUploads(
    Party& party, const std::vector<CustodianUpload>& uploads) {
  Party::Scope scope(party, Label::kInput);
  Words mine;
  for (const auto& u : uploads) {
    if (u.cells.size() != u.rows * u.columns.size() || u.thresholds.size() != 2) {
      throw ParameterError("custodian upload has an inconsistent shape");
    }
    mine.insert(mine.end(), u.cells.begin(), u.cells.end());
    mine.insert(mine.end(), u.thresholds.begin(), u.thresholds.end());
  }
  party.Send(party.prev(), mine);
  const Words theirs = party.Recv(party.next());
  party.CountRound();
  if (theirs.size() != mine.size()) {
    throw IntegrityError("parties received uploads of different sizes");
  }
  std::vector<CustodianShares> out;
  std::size_t off = 0;
  for (const auto& u : uploads) {
    CustodianShares s;
    s.columns = u.columns;
    s.data = ShareMatrix(u.rows, u.columns.size());
    const std::size_t n = u.cells.size();
    s.data.cells.a = u.cells;
    s.data.cells.b.assign(theirs.begin() + off, theirs.begin() + off + n);
    off += n;
    s.thresholds.a = u.thresholds;
    s.thresholds.b.assign(theirs.begin() + off, theirs.begin() + off + 2);
    off += 2;
    out.push_back(std::move(s));
  }
  return out;
}

ShareMatrix Concat(Party& party, const std::vector<CustodianShares>& uploads) {
  Party::Scope scope(party, Label::kConcat);
  if (uploads.empty()) throw ParameterError("no custodian data");
  const auto& ref = uploads[0].columns;
  std::vector<ShareMatrix> parts;
  for (std::size_t c = 0; c < uploads.size(); ++c) {
    const auto& cols = uploads[c].columns;
    for (std::size_t k = 0; k < std::max(ref.size(), cols.size()); ++k) {
      if (k >= ref.size() || k >= cols.size() || ref[k] != cols[k]) {
        const std::string name = k < cols.size() ? cols[k] : ref[k];
        throw ParameterError("custodian " + std::to_string(c + 1) +
                             " schema differs at column " +
                             std::to_string(k + 1) + " ('" + name + "')");
      }
    }
    if (uploads[c].data.cols != ref.size()) {
      throw ParameterError("custodian " + std::to_string(c + 1) +
                           " data does not match its header");
    }
    parts.push_back(uploads[c].data);
  }
  return StackRows(parts);
}

namespace {

struct LoopMetrics {
  ShareVec wle;       // 2f bits
  ShareVec accuracy;  // 2f bits
};

LoopMetrics RunLoop(Party& party, const ShareMatrix& data,
                    const PipelineConfig& config, int loop, double sigma) {
  const FoldPlan plan(data.rows, config.folds, config.seed,
                      static_cast<uint64_t>(loop));
  const int h = config.hyperparameters[loop];
  const LrOptions lr{config.lr_epochs, config.learning_rate};
  std::vector<ShareVec> wles, accs;
  for (int k = 0; k < config.folds; ++k) {
    const ShareMatrix train = data.Rows(plan.TrainIndices(k));
    const ShareMatrix test = data.Rows(plan.TestIndices(k));
    const BinningResult bins = Bin(party, train, config.loop_bin_means);
    const ShareMatrix test_binned = BinTest(party, test, bins.cuts);
    party.ReseedNoise(static_cast<uint64_t>(loop), static_cast<uint64_t>(k));
    const MarginalSet noisy = NoisyMarginals(party, bins.binned, sigma);
    GeneratorRequest req;
    req.n_out = train.rows;
    req.iterations = h;
    req.seed = DeriveWord(config.seed, "sdg", static_cast<uint64_t>(loop),
                          static_cast<uint64_t>(k));
    const ShareMatrix synthetic = SecureGenerate(party, noisy, req);
    const MetricVector m =
        Evaluate(party, synthetic, test_binned, bins.binned, lr);
    wles.push_back(m.wle);
    accs.push_back(m.accuracy);
  }
  Party::Scope scope(party, Label::kAvg);
  return {Avg(party, wles), Avg(party, accs)};
}

}  // namespace

PipelineOutcome RunPipeline(Party& party,
                            const std::vector<CustodianUpload>& raw_uploads,
                            const PipelineConfig& config) {
  config.Validate();
  if (static_cast<int>(raw_uploads.size()) != config.n_custodians) {
    throw ParameterError("expected " + std::to_string(config.n_custodians) +
                         " custodians, got " +
                         std::to_string(raw_uploads.size()));
  }
  const std::vector<CustodianShares> uploads =
      ReceiveUploads(party, raw_uploads);
  const ShareMatrix data = Concat(party, uploads);
  PipelineOutcome out;
  out.combined_rows = data.rows;
  out.genes = data.cols - 1;
  if (data.rows < 2 * static_cast<std::size_t>(config.folds)) {
    throw ParameterError("need at least two rows per fold");
  }
  out.calibration =
      Calibrate(config.synthesis.epsilon, config.synthesis.delta,
                MeasurementCount(out.genes));
  const double sigma = out.calibration.sigma;
  const int loops = std::min<int>(config.max_loops,
                                  static_cast<int>(config.hyperparameters.size()));

  if (config.mode == SearchMode::kFirstPass) {
    for (int loop = 0; loop < loops; ++loop) {
      const LoopMetrics m = RunLoop(party, data, config, loop, sigma);
      out.loops = loop + 1;
      Party::Scope scope(party, Label::kVote);
      const ShareVec pass = SecretVote(party, m.wle, m.accuracy, uploads);
      const Words bit = Open(party, pass, "vote");
      out.vote_bits.push_back(bit[0]);
      if (bit[0] == 1) {
        out.publish = true;
        out.chosen_index = loop;
        break;
      }
    }
  } else {
    const int f2 = 2 * party.frac_bits();
    ShareVec best_acc = PublicShare(party, {0 - (uint64_t{1} << f2)});
    ShareVec best_idx = PublicShare(party, {0});
    ShareVec any = PublicShare(party, {0});
    for (int loop = 0; loop < loops; ++loop) {
      const LoopMetrics m = RunLoop(party, data, config, loop, sigma);
      out.loops = loop + 1;
      Party::Scope scope(party, Label::kVote);
      const ShareVec pass = SecretVote(party, m.wle, m.accuracy, uploads);
      const ShareVec better =
          Mul(party, pass, Lt(party, best_acc, m.accuracy));
      ShareVec bits = better;
      bits.Append(better);
      ShareVec from = best_acc;
      from.Append(best_idx);
      ShareVec to = m.accuracy;
      to.Append(PublicShare(party, {static_cast<uint64_t>(loop)}));
      const ShareVec chosen = Select(party, bits, from, to);
      best_acc = chosen.Slice(0, 1);
      best_idx = chosen.Slice(1, 1);
      // any |= pass
      any = Sub(Add(any, pass), Mul(party, any, pass));
    }
    Party::Scope scope(party, Label::kVote);
    const Words bit = Open(party, any, "vote");
    out.vote_bits.push_back(bit[0]);
    if (bit[0] == 1) {
      out.publish = true;
      out.chosen_index = static_cast<int>(Open(party, best_idx, "best")[0]);
    }
  }
  if (!out.publish) return out;
  out.chosen_value = config.hyperparameters[*out.chosen_index];

  // Publish path on the full combined data.
  const BinningResult bins = Bin(party, data, true);
  party.ReseedNoise(kPublishNoiseContext, 0);
  const MarginalSet noisy = NoisyMarginals(party, bins.binned, sigma);
  GeneratorRequest req;
  req.n_out = config.publish_rows == 0 ? data.rows : config.publish_rows;
  req.iterations = *out.chosen_value;
  req.seed = DeriveWord(config.seed, "sdg-publish");
  const ShareMatrix synthetic = SecureGenerate(party, noisy, req);
  ShareMatrix debinned = InvBin(party, synthetic, *bins.means);
  {
    Party::Scope scope(party, Label::kReveal);
    party.LogCustodianOpening("synthetic", debinned.cells.size());
  }
  out.synthetic = std::move(debinned);
  return out;
}

ShareVec SecretVote(Party& party, const ShareVec& wle,
                    const ShareVec& accuracy,
                    const std::vector<CustodianShares>& uploads) {
  const std::size_t n = uploads.size();
  const uint64_t one = party.fp().One();
  ShareVec lhs, rhs;
  for (const auto& u : uploads) {
    // Fails when max_wle < wle.
    lhs.Append(MulPublic(u.thresholds.Slice(0, 1), one));
    rhs.Append(wle);
  }
  for (const auto& u : uploads) {
    // Fails when accuracy < min_accuracy.
    lhs.Append(accuracy);
    rhs.Append(MulPublic(u.thresholds.Slice(1, 1), one));
  }
  const ShareVec fail = Lt(party, lhs, rhs);
  const ShareVec pass_wle = NotBit(party, fail.Slice(0, n));
  const ShareVec pass_acc = NotBit(party, fail.Slice(n, n));
  const ShareVec pass = Mul(party, pass_wle, pass_acc);
  // votes = n - sum(1 - pass)
  const ShareVec votes = AddPublic(party, Neg(SumAll(NotBit(party, pass))), n);
  return EqPublic(party, votes, n);
}

BudgetReport MakeBudgetReport(const PipelineConfig& config,
                              std::size_t genes) {
  BudgetReport r;
  r.synthesis = config.synthesis;
  r.preprocessing = config.preprocessing;
  r.claimed_epsilon = config.synthesis.epsilon + config.preprocessing.epsilon;
  r.claimed_delta = config.synthesis.delta + config.preprocessing.delta;
  r.per_measurement = Calibrate(config.synthesis.epsilon,
                                config.synthesis.delta, MeasurementCount(genes));
  r.note =
      "the preprocessing budget is reserved but not consumed: quantiles are "
      "exact; tuning-loop measurements are never published, so the claimed "
      "budget does not grow with the number of loops";
  return r;
}

ClearDataset DecodeSynthetic(const Words& cells, std::size_t rows,
                             const std::vector<std::string>& gene_names,
                             const FixedPointConfig& fp) {
  const std::size_t d = gene_names.size();
  if (cells.size() != rows * (d + 1)) {
    throw ParameterError("synthetic output has the wrong size");
  }
  ClearDataset out;
  out.gene_names = gene_names;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t g = 0; g < d; ++g) {
      out.genes.push_back(Decode(RingValue(cells[r * (d + 1) + g]), fp));
    }
    out.labels.push_back(static_cast<int>(cells[r * (d + 1) + d]));
  }
  return out;
}

LocalRun RunLocal(const std::vector<ClearDataset>& datasets,
                  const std::vector<Thresholds>& thresholds,
                  const PipelineConfig& config) {
  config.Validate();
  if (datasets.size() != thresholds.size()) {
    throw ParameterError("one thresholds entry per dataset is required");
  }
  std::array<std::vector<CustodianUpload>, 3> uploads;
  for (std::size_t c = 0; c < datasets.size(); ++c) {
    Prg rng(SeedFromMaster(config.seed, "custodian", c));
    auto shares = ShareCustodianInput(datasets[c], thresholds[c], config.fp, rng);
    for (int p = 0; p < 3; ++p) uploads[p].push_back(std::move(shares[p]));
  }
  SessionOptions opts;
  opts.master_seed = config.seed;
  opts.canonical_config = config.Canonical();

  LocalRun run;
  std::array<PipelineOutcome, 3> outcomes;
  RunThreeParties(config.fp, opts, [&](Party& party) {
    const int i = party.index();
    outcomes[i] = RunPipeline(party, uploads[i], config);
    run.ledgers[i] = party.ledger();
    run.openings[i] = party.openings();
    run.enclave_reveals[i] = party.enclave_reveals();
  });
  run.outcome = outcomes[0];
  if (outcomes[0].publish) {
    std::array<ShareVec, 3> views;
    for (int p = 0; p < 3; ++p) views[p] = outcomes[p].synthetic->cells;
    run.synthetic =
        DecodeSynthetic(Reconstruct(views), outcomes[0].synthetic->rows,
                        datasets[0].gene_names, config.fp);
  }
  return run;
}

}  // namespace mpcsdg
