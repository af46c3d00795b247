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

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

// Local XOR-linear operations.
BoolVec Xor(const BoolVec& x, const BoolVec& y);
BoolVec XorPublic(const Party& party, const BoolVec& x, uint64_t c);
BoolVec Not(const Party& party, const BoolVec& x);
BoolVec AndPublic(const BoolVec& x, uint64_t mask);
BoolVec ShiftLeft(const BoolVec& x, int s);
BoolVec ShiftRightLogical(const BoolVec& x, int s);
BoolVec ShiftRightArith(const BoolVec& x, int s);
BoolVec BitReverse(const BoolVec& x);
BoolVec ConcatBool(const BoolVec& x, const BoolVec& y);
BoolVec SliceBool(const BoolVec& x, std::size_t begin, std::size_t count);

// Bitwise AND of 64-bit words. One round.
BoolVec And(Party& party, const BoolVec& x, const BoolVec& y);

// x + y + z mod 2^64 on boolean shares: one carry-save layer followed by a
// Kogge-Stone adder. Eight rounds.
BoolVec AddBool3(Party& party, const BoolVec& x, const BoolVec& y,
                 const BoolVec& z);

// Arithmetic to boolean sharing. Eight rounds.
BoolVec A2B(Party& party, const ShareVec& x);
// Boolean to arithmetic sharing of full words. Nine rounds.
ShareVec B2A(Party& party, const BoolVec& x);
// Lifts bit 0 of each word to an arithmetic 0/1 secret. Two rounds.
ShareVec B2ABit(Party& party, const BoolVec& x);

// floor(x / 2^s) on the signed interpretation, exactly. Seventeen rounds.
ShareVec Trunc(Party& party, const ShareVec& x, int s);

}  // namespace mpcsdg
