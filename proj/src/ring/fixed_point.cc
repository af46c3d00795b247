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

#include "mpcsdg/ring/fixed_point.h"

#include <cmath>
#include <string>

#include "mpcsdg/errors.h"

namespace mpcsdg {

void FixedPointConfig::Validate() const {
  if (frac_bits < kMinFracBits || frac_bits > kMaxFracBits) {
    throw ParameterError("frac_bits must lie in [8, 24], got " +
                         std::to_string(frac_bits));
  }
}

double FixedPointConfig::MaxMagnitude() const {
  return std::ldexp(1.0, 62 - 2 * frac_bits);
}

double FixedPointConfig::Ulp() const { return std::ldexp(1.0, -frac_bits); }

RingValue Encode(double x, const FixedPointConfig& cfg) {
  if (!std::isfinite(x) || std::fabs(x) >= cfg.MaxMagnitude()) {
    throw RangeError("value " + std::to_string(x) +
                     " outside fixed-point range");
  }
  // llround rounds half away from zero; the scaled value is exact in double.
  const long long scaled = std::llround(std::ldexp(x, cfg.frac_bits));
  return RingValue::FromSigned(scaled);
}

double Decode(RingValue v, const FixedPointConfig& cfg) {
  return DecodeScaled(v.word, cfg.frac_bits);
}

double DecodeScaled(uint64_t word, int frac_bits) {
  return std::ldexp(static_cast<double>(static_cast<int64_t>(word)),
                    -frac_bits);
}

RingValue Truncate(RingValue v, int bits) {
  return RingValue::FromSigned(ArithmeticShift(v.word, bits));
}

uint64_t InverseOdd(uint64_t odd) {
  // Each step doubles the number of correct low bits; 3 bits are correct to
  // start with since odd * odd == 1 mod 8.
  uint64_t inv = odd;
  for (int i = 0; i < 5; ++i) inv *= 2 - odd * inv;
  return inv;
}

uint64_t ExactDivisionConstant(int64_t divisor, int frac_bits) {
  if (divisor == 0) throw ParameterError("division constant for zero");
  const bool negative = divisor < 0;
  uint64_t mag = static_cast<uint64_t>(negative ? -divisor : divisor);
  int twos = 0;
  while ((mag & 1) == 0) {
    mag >>= 1;
    ++twos;
  }
  if (twos > frac_bits) {
    throw ParameterError("divisor has more factors of two than frac_bits");
  }
  uint64_t k = InverseOdd(mag) << (frac_bits - twos);
  return negative ? 0 - k : k;
}

}  // namespace mpcsdg
