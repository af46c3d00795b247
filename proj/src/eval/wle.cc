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


#include "mpcsdg/eval/wle.h"

#include "mpcsdg/errors.h"
#include "mpcsdg/primitives/compare.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"
#include "mpcsdg/sdg/marginals.h"

namespace mpcsdg {

uint64_t ReciprocalScale(std::size_t n) {
  if (n == 0) throw ParameterError("reciprocal of zero");
  const uint64_t num = uint64_t{1} << 32;
  return (num + n - 1) / n;
}

ShareVec WorkloadError(Party& party, const ShareMatrix& real,
                       const ShareMatrix& synthetic) {
  if (real.cols != synthetic.cols) {
    throw ParameterError("datasets have different column counts");
  }
  if (real.rows == 0 || synthetic.rows == 0) {
    throw ParameterError("workload error of an empty dataset");
  }
  Party::Scope scope(party, Label::kWle);
  const std::size_t d = real.cols - 1;
  const ShareVec mu_real = ExactMarginals(party, real).Flatten();
  const ShareVec mu_syn = ExactMarginals(party, synthetic).Flatten();
  const std::size_t m = mu_real.size();

  ShareVec scaled = MulPublic(mu_real, ReciprocalScale(real.rows));
  scaled.Append(MulPublic(mu_syn, ReciprocalScale(synthetic.rows)));
  const ShareVec freq = Trunc(party, scaled, 32);
  const ShareVec diff = Sub(freq.Slice(0, m), freq.Slice(m, m));
  const ShareVec total = SumAll(Abs(party, diff));
  return Trunc(party, MulPublic(total, ReciprocalScale(MeasurementCount(d))),
               32);
}

}  // namespace mpcsdg
