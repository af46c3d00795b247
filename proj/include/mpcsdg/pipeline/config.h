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
#include <string>
#include <vector>

#include "mpcsdg/ring/fixed_point.h"

namespace mpcsdg {

enum class SearchMode {
  // Stop at the first hyperparameter every custodian accepts.
  kFirstPass,
  // Try every hyperparameter and publish the accepted one with the best
  // accuracy.
  kExhaustive,
};

std::string SearchModeName(SearchMode mode);
// Throws ParameterError.
SearchMode ParseSearchMode(const std::string& text);

struct PrivacyBudget {
  double epsilon = 1.0;
  double delta = 1e-5;
};

struct PipelineConfig {
  int folds = 5;
  int max_loops = 4;
  // Proportional-fitting passes of the generator, scanned in order.
  std::vector<int> hyperparameters = {10, 15, 25, 30};
  PrivacyBudget synthesis{1.0, 1e-5};
  // Threaded through and reported; binning computes exact quantiles and
  // does not consume it.
  PrivacyBudget preprocessing{1.0, 1e-5};
  uint64_t seed = 0;
  int n_custodians = 1;
  FixedPointConfig fp;
  int lr_epochs = 150;
  double learning_rate = 0.05;
  // Published row count; 0 means the combined row count.
  std::size_t publish_rows = 0;
  SearchMode mode = SearchMode::kFirstPass;
  // Whether training-fold binning also computes bin means (not needed for
  // evaluation).
  bool loop_bin_means = false;

  // Throws ParameterError naming the offending field.
  void Validate() const;
  // key=value lines compared between parties at setup (frac_bits is
  // checked separately).
  std::string Canonical() const;
};

// Per-custodian quality bars: workload error at most max_wle and accuracy
// at least min_accuracy.
struct Thresholds {
  double max_wle = 0;
  double min_accuracy = 0;
};

}  // namespace mpcsdg
