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


#include "mpcsdg/primitives/random.h"

#include <cmath>

#include "mpcsdg/errors.h"
#include "mpcsdg/rss/arith.h"
#include "mpcsdg/rss/boolean.h"

namespace mpcsdg {

ShareVec RandUniform01(Party& party, std::size_t n) {
  auto [ra, rb] = party.Correlated(Stream::kNoise, n);
  const uint64_t mask = party.fp().One() - 1;
  party.CountOp("uniform", n);
  return B2A(party, AndPublic(BoolVec(std::move(ra), std::move(rb)), mask));
}

namespace internal {

ShareVec GaussFromUniforms(const Party& party, const ShareVec& uniforms,
                           std::size_t n) {
  if (uniforms.size() != 12 * n) {
    throw ParameterError("expected twelve uniforms per sample");
  }
  ShareVec sum(n);
  for (std::size_t j = 0; j < 12; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      sum.a[i] += uniforms.a[j * n + i];
      sum.b[i] += uniforms.b[j * n + i];
    }
  }
  return AddPublic(party, sum, 0 - 6 * party.fp().One());
}

}  // namespace internal

ShareVec Gauss01(Party& party, std::size_t n) {
  Party::Scope scope(party, Label::kGauss);
  party.CountOp("gauss", n);
  return internal::GaussFromUniforms(party, RandUniform01(party, 12 * n), n);
}

ShareVec Avg(const Party& party, const std::vector<ShareVec>& values) {
  if (values.empty()) throw ParameterError("average of zero values");
  ShareVec sum = values[0];
  for (std::size_t k = 1; k < values.size(); ++k) sum = Add(sum, values[k]);
  const uint64_t scale = static_cast<uint64_t>(std::llround(
      std::ldexp(1.0, party.frac_bits()) / static_cast<double>(values.size())));
  return MulPublic(sum, scale);
}

}  // namespace mpcsdg
