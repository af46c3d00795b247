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
#include <vector>

namespace mpcsdg {

// Public K-fold split: a seeded shuffle of the row indices cut into K
// contiguous blocks whose sizes differ by at most one.
class FoldPlan {
 public:
  // Throws ParameterError unless 2 <= folds <= rows.
  FoldPlan(std::size_t rows, int folds, uint64_t seed, uint64_t loop);

  int folds() const { return folds_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  // Both throw ParameterError for a fold outside [0, K).
  std::vector<std::size_t> TestIndices(int fold) const;
  std::vector<std::size_t> TrainIndices(int fold) const;

 private:
  std::pair<std::size_t, std::size_t> Block(int fold) const;

  int folds_;
  std::vector<std::size_t> perm_;
};

}  // namespace mpcsdg
