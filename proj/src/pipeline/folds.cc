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


#include "mpcsdg/pipeline/folds.h"

#include <numeric>
#include <string>

#include "mpcsdg/errors.h"
#include "mpcsdg/runtime/prg.h"

namespace mpcsdg {

FoldPlan::FoldPlan(std::size_t rows, int folds, uint64_t seed, uint64_t loop)
    : folds_(folds) {
  if (folds < 2) throw ParameterError("need at least 2 folds");
  if (rows < static_cast<std::size_t>(folds)) {
    throw ParameterError("fewer rows than folds");
  }
  perm_.resize(rows);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  Prg prg(SeedFromMaster(seed, "folds", loop));
  for (std::size_t i = rows; i > 1; --i) {
    const std::size_t j = prg.Uniform(i);
    std::swap(perm_[i - 1], perm_[j]);
  }
}

std::pair<std::size_t, std::size_t> FoldPlan::Block(int fold) const {
  if (fold < 0 || fold >= folds_) {
    throw ParameterError("fold " + std::to_string(fold) + " out of range");
  }
  const std::size_t n = perm_.size();
  const std::size_t k = static_cast<std::size_t>(folds_);
  const std::size_t f = static_cast<std::size_t>(fold);
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  const std::size_t begin = f * base + std::min(f, extra);
  const std::size_t size = base + (f < extra ? 1 : 0);
  return {begin, begin + size};
}

std::vector<std::size_t> FoldPlan::TestIndices(int fold) const {
  const auto [b, e] = Block(fold);
  return std::vector<std::size_t>(perm_.begin() + b, perm_.begin() + e);
}

std::vector<std::size_t> FoldPlan::TrainIndices(int fold) const {
  const auto [b, e] = Block(fold);
  std::vector<std::size_t> out(perm_.begin(), perm_.begin() + b);
  out.insert(out.end(), perm_.begin() + e, perm_.end());
  return out;
}

}  // namespace mpcsdg
