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


#include "mpcsdg/rss/boolean.h"

#include "mpcsdg/errors.h"
#include "mpcsdg/rss/arith.h"

namespace mpcsdg {

namespace {

template <typename F>
BoolVec MapLocal(const BoolVec& x, F f) {
  BoolVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = f(x.a[i]);
    out.b[i] = f(x.b[i]);
  }
  return out;
}

uint64_t Reverse(uint64_t v) {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  return (v >> 32) | (v << 32);
}

BoolVec BoolComponent(const Party& party, int j, const Words& own_a,
                      const Words& own_b) {
  BoolVec out(own_a.size());
  if (party.index() == j) out.a = own_a;
  if ((party.index() + 1) % kNumParties == j) out.b = own_b;
  return out;
}

// u + v with a Kogge-Stone prefix network. Seven rounds.
BoolVec AddBool2(Party& party, const BoolVec& u, const BoolVec& v) {
  const std::size_t n = u.size();
  const BoolVec p0 = Xor(u, v);
  BoolVec g = And(party, u, v);
  BoolVec p = p0;
  for (int s = 1; s < 64; s <<= 1) {
    if (s < 32) {
      const BoolVec prod = And(party, ConcatBool(p, p),
                               ConcatBool(ShiftLeft(g, s), ShiftLeft(p, s)));
      g = Xor(g, SliceBool(prod, 0, n));
      p = SliceBool(prod, n, n);
    } else {
      g = Xor(g, And(party, p, ShiftLeft(g, s)));
    }
  }
  return Xor(p0, ShiftLeft(g, 1));
}

}  // namespace

BoolVec Xor(const BoolVec& x, const BoolVec& y) {
  if (x.size() != y.size()) throw ParameterError("bool vector size mismatch");
  BoolVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = x.a[i] ^ y.a[i];
    out.b[i] = x.b[i] ^ y.b[i];
  }
  return out;
}

BoolVec XorPublic(const Party& party, const BoolVec& x, uint64_t c) {
  BoolVec out = x;
  if (party.index() == 0) {
    for (auto& w : out.a) w ^= c;
  } else if (party.index() == 2) {
    for (auto& w : out.b) w ^= c;
  }
  return out;
}

BoolVec Not(const Party& party, const BoolVec& x) {
  return XorPublic(party, x, ~uint64_t{0});
}

BoolVec AndPublic(const BoolVec& x, uint64_t mask) {
  return MapLocal(x, [mask](uint64_t w) { return w & mask; });
}

BoolVec ShiftLeft(const BoolVec& x, int s) {
  return MapLocal(x, [s](uint64_t w) { return w << s; });
}

BoolVec ShiftRightLogical(const BoolVec& x, int s) {
  return MapLocal(x, [s](uint64_t w) { return w >> s; });
}

BoolVec ShiftRightArith(const BoolVec& x, int s) {
  return MapLocal(x, [s](uint64_t w) {
    return static_cast<uint64_t>(static_cast<int64_t>(w) >> s);
  });
}

BoolVec BitReverse(const BoolVec& x) { return MapLocal(x, Reverse); }

BoolVec ConcatBool(const BoolVec& x, const BoolVec& y) {
  BoolVec out = x;
  out.a.insert(out.a.end(), y.a.begin(), y.a.end());
  out.b.insert(out.b.end(), y.b.begin(), y.b.end());
  return out;
}

BoolVec SliceBool(const BoolVec& x, std::size_t begin, std::size_t count) {
  return BoolVec(Words(x.a.begin() + begin, x.a.begin() + begin + count),
                 Words(x.b.begin() + begin, x.b.begin() + begin + count));
}

BoolVec And(Party& party, const BoolVec& x, const BoolVec& y) {
  if (x.size() != y.size()) throw ParameterError("bool vector size mismatch");
  const std::size_t n = x.size();
  Words z = party.ZeroShareXor(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] ^= (x.a[i] & y.a[i]) ^ (x.a[i] & y.b[i]) ^ (x.b[i] & y.a[i]);
  }
  party.Send(party.prev(), z);
  Words from_next = party.Recv(party.next());
  party.CountRound();
  return BoolVec(std::move(z), std::move(from_next));
}

BoolVec AddBool3(Party& party, const BoolVec& x, const BoolVec& y,
                 const BoolVec& z) {
  const BoolVec sum = Xor(Xor(x, y), z);
  // majority(x, y, z) = ((x ^ z) & (y ^ z)) ^ z
  const BoolVec carry = Xor(And(party, Xor(x, z), Xor(y, z)), z);
  return AddBool2(party, sum, ShiftLeft(carry, 1));
}

BoolVec A2B(Party& party, const ShareVec& x) {
  party.CountOp("a2b", x.size());
  const BoolVec x0 = BoolComponent(party, 0, x.a, x.b);
  const BoolVec x1 = BoolComponent(party, 1, x.a, x.b);
  const BoolVec x2 = BoolComponent(party, 2, x.a, x.b);
  return AddBool3(party, x0, x1, x2);
}

ShareVec B2A(Party& party, const BoolVec& x) {
  const std::size_t n = x.size();
  party.CountOp("b2a", n);
  // r1 is known to parties 0 and 1, r2 to parties 1 and 2.
  auto [ra, rb] = party.Correlated(Stream::kRand, n);
  Words neg_a(n), neg_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_a[i] = 0 - ra[i];
    neg_b[i] = 0 - rb[i];
  }
  const BoolVec m1 = BoolComponent(party, 1, neg_a, neg_b);
  const BoolVec m2 = BoolComponent(party, 2, neg_a, neg_b);
  const BoolVec masked = AddBool3(party, x, m1, m2);

  // Reveal masked to parties 0 and 2 only.
  const int i = party.index();
  ShareVec out(n);
  if (i == 1) {
    party.Send(0, masked.b);
    out.a = ra;
    out.b = rb;
  } else if (i == 0) {
    party.Send(2, masked.b);
    const Words third = party.Recv(1);
    for (std::size_t k = 0; k < n; ++k) {
      out.a[k] = masked.a[k] ^ masked.b[k] ^ third[k];
    }
    out.b = rb;
  } else {
    const Words third = party.Recv(0);
    for (std::size_t k = 0; k < n; ++k) {
      out.b[k] = masked.a[k] ^ masked.b[k] ^ third[k];
    }
    out.a = ra;
  }
  party.CountRound();
  return out;
}

ShareVec B2ABit(Party& party, const BoolVec& x) {
  const std::size_t n = x.size();
  Words bit_a(n), bit_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    bit_a[i] = x.a[i] & 1;
    bit_b[i] = x.b[i] & 1;
  }
  const ShareVec c0 = ComponentShare(party, 0, bit_a, bit_b);
  const ShareVec c1 = ComponentShare(party, 1, bit_a, bit_b);
  const ShareVec c2 = ComponentShare(party, 2, bit_a, bit_b);
  // a ^ b = a + b - 2ab on bits.
  const ShareVec t =
      Sub(Add(c0, c1), MulPublic(Mul(party, c0, c1), uint64_t{2}));
  return Sub(Add(t, c2), MulPublic(Mul(party, t, c2), uint64_t{2}));
}

ShareVec Trunc(Party& party, const ShareVec& x, int s) {
  if (s < 0 || s > 62) throw ParameterError("truncation shift out of range");
  if (s == 0 || x.empty()) return x;
  party.CountOp("trunc", x.size());
  return B2A(party, ShiftRightArith(A2B(party, x), s));
}

}  // namespace mpcsdg
