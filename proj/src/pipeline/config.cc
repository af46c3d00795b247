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


#include "mpcsdg/pipeline/config.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mpcsdg/errors.h"

namespace mpcsdg {

std::string SearchModeName(SearchMode mode) {
  return mode == SearchMode::kFirstPass ? "first-pass" : "exhaustive";
}

SearchMode ParseSearchMode(const std::string& text) {
  if (text == "first-pass") return SearchMode::kFirstPass;
  if (text == "exhaustive") return SearchMode::kExhaustive;
  throw ParameterError("mode must be first-pass or exhaustive, got '" + text +
                       "'");
}

namespace {

std::string Shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void Require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ParameterError(field + ": " + why);
}

}  // namespace

void PipelineConfig::Validate() const {
  Require(folds >= 2, "folds", "must be at least 2");
  Require(max_loops >= 1, "max_loops", "must be at least 1");
  Require(!hyperparameters.empty(), "hyperparameters", "must not be empty");
  for (int h : hyperparameters) {
    Require(h >= 0, "hyperparameters", "iteration counts must be >= 0");
  }
  Require(synthesis.epsilon > 0 && std::isfinite(synthesis.epsilon),
          "epsilon_s", "must be positive");
  Require(synthesis.delta > 0 && synthesis.delta < 1, "delta_s",
          "must lie in (0, 1)");
  Require(preprocessing.epsilon > 0 && std::isfinite(preprocessing.epsilon),
          "epsilon_p", "must be positive");
  Require(preprocessing.delta > 0 && preprocessing.delta < 1, "delta_p",
          "must lie in (0, 1)");
  Require(n_custodians >= 1, "n_custodians", "must be at least 1");
  Require(fp.frac_bits >= kMinFracBits && fp.frac_bits <= kMaxFracBits,
          "frac_bits", "must lie in [8, 24]");
  Require(lr_epochs >= 0, "lr_epochs", "must be >= 0");
  Require(learning_rate > 0 && std::isfinite(learning_rate), "learning_rate",
          "must be positive");
}

std::string PipelineConfig::Canonical() const {
  std::ostringstream os;
  os << "folds=" << folds << '\n';
  os << "max_loops=" << max_loops << '\n';
  os << "hyperparameters=";
  for (std::size_t i = 0; i < hyperparameters.size(); ++i) {
    os << (i ? "," : "") << hyperparameters[i];
  }
  os << '\n';
  os << "epsilon_s=" << Shortest(synthesis.epsilon) << '\n';
  os << "delta_s=" << Shortest(synthesis.delta) << '\n';
  os << "epsilon_p=" << Shortest(preprocessing.epsilon) << '\n';
  os << "delta_p=" << Shortest(preprocessing.delta) << '\n';
  os << "seed=" << seed << '\n';
  os << "n_custodians=" << n_custodians << '\n';
  os << "lr_epochs=" << lr_epochs << '\n';
  os << "learning_rate=" << Shortest(learning_rate) << '\n';
  os << "publish_rows=" << publish_rows << '\n';
  os << "mode=" << SearchModeName(mode) << '\n';
  os << "loop_bin_means=" << (loop_bin_means ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace mpcsdg
