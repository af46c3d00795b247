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


#include "mpcsdg/eval/evaluate.h"

#include "mpcsdg/eval/wle.h"

namespace mpcsdg {

MetricVector Evaluate(Party& party, const ShareMatrix& synthetic_train,
                      const ShareMatrix& test, const ShareMatrix& real_train,
                      const LrOptions& options) {
  Party::Scope scope(party, Label::kEval);
  MetricVector m;
  m.wle = WorkloadError(party, real_train, synthetic_train);
  const LrModel model = TrainLogReg(party, synthetic_train, options);
  m.accuracy = LrAccuracy(party, model, test);
  return m;
}

}  // namespace mpcsdg
