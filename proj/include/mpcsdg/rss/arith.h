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

#include <string>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

// Local linear operations. None of these communicate.
ShareVec Add(const ShareVec& x, const ShareVec& y);
ShareVec Sub(const ShareVec& x, const ShareVec& y);
ShareVec Neg(const ShareVec& x);
ShareVec MulPublic(const ShareVec& x, uint64_t c);
ShareVec MulPublic(const ShareVec& x, const Words& c);
ShareVec AddPublic(const Party& party, const ShareVec& x, uint64_t c);
ShareVec AddPublic(const Party& party, const ShareVec& x, const Words& c);
// Sharing of a public vector (no randomness; only for values everyone knows).
ShareVec PublicShare(const Party& party, const Words& values);
// Sharing whose component j is taken from the caller's own shares and whose
// other components are zero. Only parties j and j-1 contribute.
ShareVec ComponentShare(const Party& party, int j, const Words& own_a,
                        const Words& own_b);
ShareVec SumAll(const ShareVec& x);

// a_x*a_y + a_x*b_y + b_x*a_y: this party's additive term of x*y.
Words CrossTerms(const ShareVec& x, const ShareVec& y);
void AccumulateCross(const ShareVec& x, std::size_t xi, const ShareVec& y,
                     std::size_t yi, uint64_t& acc);
// Turns additive terms z_i (sum = secret) into replicated shares: adds a
// zero sharing, sends z_i to the previous party. One round.
ShareVec Reshare(Party& party, Words z);

// Elementwise product, exact in the ring. One round, one word per element
// per party.
ShareVec Mul(Party& party, const ShareVec& x, const ShareVec& y);

// For each group g: sum_k x[g*len + k] * y[g*len + k]. One round and one
// word per group, independent of `len`.
ShareVec InnerProducts(Party& party, const ShareVec& x, const ShareVec& y,
                       std::size_t len);

// (n x k) times (k x m), row-major. Exact ring product, one round.
ShareVec MatMul(Party& party, const ShareVec& x, const ShareVec& w,
                std::size_t n, std::size_t k, std::size_t m);
// x^T * e for x (n x k) and e (n x m). One round.
ShareVec MatMulTransposeLeft(Party& party, const ShareVec& x,
                             const ShareVec& e, std::size_t n, std::size_t k,
                             std::size_t m);

// Opens to all three parties and records the values in the opening log.
Words Open(Party& party, const ShareVec& x, const std::string& what);
// Opens only to `target`; other parties get an empty vector. Recorded as
// an enclave reveal, not a public opening.
Words RevealTo(Party& party, const ShareVec& x, int target,
               const std::string& what);
// Secret-shares values known to `dealer` (ignored elsewhere). `n` must be
// the public length. One round, two words per element from the dealer.
ShareVec Input(Party& party, int dealer, const Words& values, std::size_t n);

}  // namespace mpcsdg
