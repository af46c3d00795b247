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

// Flat buffers of ring words. Every secure vector operation works on these.
using Words = std::vector<uint64_t>;

// An element of Z_{2^64}. Arithmetic wraps; the signed view is two's
// complement.
struct RingValue {
  uint64_t word = 0;

  constexpr RingValue() = default;
  constexpr explicit RingValue(uint64_t w) : word(w) {}

  static constexpr RingValue FromSigned(int64_t v) {
    return RingValue(static_cast<uint64_t>(v));
  }
  constexpr int64_t Signed() const { return static_cast<int64_t>(word); }

  friend constexpr RingValue operator+(RingValue x, RingValue y) {
    return RingValue(x.word + y.word);
  }
  friend constexpr RingValue operator-(RingValue x, RingValue y) {
    return RingValue(x.word - y.word);
  }
  friend constexpr RingValue operator*(RingValue x, RingValue y) {
    return RingValue(x.word * y.word);
  }
  constexpr RingValue operator-() const { return RingValue(0 - word); }
  RingValue& operator+=(RingValue o) {
    word += o.word;
    return *this;
  }
  RingValue& operator-=(RingValue o) {
    word -= o.word;
    return *this;
  }
  friend constexpr bool operator==(RingValue, RingValue) = default;
};

inline constexpr int kRingBits = 64;
inline constexpr int kDefaultFracBits = 16;
inline constexpr int kMinFracBits = 8;
inline constexpr int kMaxFracBits = 24;

struct FixedPointConfig {
  int frac_bits = kDefaultFracBits;

  // Throws ParameterError unless frac_bits lies in [8, 24].
  void Validate() const;

  // Largest magnitude accepted by Encode: 2^(62 - 2f).
  double MaxMagnitude() const;
  // 2^-f.
  double Ulp() const;
  uint64_t One() const { return uint64_t{1} << frac_bits; }

  friend bool operator==(const FixedPointConfig&,
                         const FixedPointConfig&) = default;
};

// round(x * 2^f) reduced mod 2^64, rounding half away from zero.
// Throws RangeError when |x| >= MaxMagnitude() or x is not finite.
RingValue Encode(double x, const FixedPointConfig& cfg);

// Signed interpretation divided by 2^f.
double Decode(RingValue v, const FixedPointConfig& cfg);

// Same as Decode for a value carrying `frac_bits` fractional bits.
double DecodeScaled(uint64_t word, int frac_bits);

// Arithmetic right shift of the signed interpretation: floor(v / 2^bits).
RingValue Truncate(RingValue v, int bits);

inline int64_t ArithmeticShift(uint64_t word, int bits) {
  return static_cast<int64_t>(word) >> bits;
}

// Multiplicative inverse of an odd ring element (Newton iteration on 2-adic
// integers).
uint64_t InverseOdd(uint64_t odd);

// Ring constant k such that n * k == (n / divisor) * 2^frac_bits for every
// integer n that is an exact multiple of `divisor`. `divisor` may be negative;
// its power-of-two part must not exceed 2^frac_bits.
uint64_t ExactDivisionConstant(int64_t divisor, int frac_bits);

}  // namespace mpcsdg
