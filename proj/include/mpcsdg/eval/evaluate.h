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

#include "mpcsdg/eval/logreg.h"
#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

// Secret quality metrics of one synthetic dataset, f-bit fixed point.
struct MetricVector {
  ShareVec wle;
  ShareVec accuracy;
};

// Workload error of the synthetic training data against the real training
// data, and accuracy on the test split of a model trained on the synthetic
// data. Nothing is opened. Runs under EVAL.
MetricVector Evaluate(Party& party, const ShareMatrix& synthetic_train,
                      const ShareMatrix& test, const ShareMatrix& real_train,
                      const LrOptions& options);

}  // namespace mpcsdg
