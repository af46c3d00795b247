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


#include "mpcsdg/rss/arith.h"

#include "mpcsdg/errors.h"

namespace mpcsdg {

namespace {

void CheckSizes(const ShareVec& x, const ShareVec& y) {
  if (x.size() != y.size()) throw ParameterError("share vector size mismatch");
}

}  // namespace

ShareVec Add(const ShareVec& x, const ShareVec& y) {
  CheckSizes(x, y);
  ShareVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = x.a[i] + y.a[i];
    out.b[i] = x.b[i] + y.b[i];
  }
  return out;
}

ShareVec Sub(const ShareVec& x, const ShareVec& y) {
  CheckSizes(x, y);
  ShareVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = x.a[i] - y.a[i];
    out.b[i] = x.b[i] - y.b[i];
  }
  return out;
}

ShareVec Neg(const ShareVec& x) {
  ShareVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = 0 - x.a[i];
    out.b[i] = 0 - x.b[i];
  }
  return out;
}

ShareVec MulPublic(const ShareVec& x, uint64_t c) {
  ShareVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = x.a[i] * c;
    out.b[i] = x.b[i] * c;
  }
  return out;
}

ShareVec MulPublic(const ShareVec& x, const Words& c) {
  if (c.size() != x.size()) throw ParameterError("public vector size mismatch");
  ShareVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[i] = x.a[i] * c[i];
    out.b[i] = x.b[i] * c[i];
  }
  return out;
}

ShareVec AddPublic(const Party& party, const ShareVec& x, uint64_t c) {
  return AddPublic(party, x, Words(x.size(), c));
}

ShareVec AddPublic(const Party& party, const ShareVec& x, const Words& c) {
  if (c.size() != x.size()) throw ParameterError("public vector size mismatch");
  // The constant lives in component 0: party 0's a and party 2's b.
  ShareVec out = x;
  if (party.index() == 0) {
    for (std::size_t i = 0; i < c.size(); ++i) out.a[i] += c[i];
  } else if (party.index() == 2) {
    for (std::size_t i = 0; i < c.size(); ++i) out.b[i] += c[i];
  }
  return out;
}

ShareVec PublicShare(const Party& party, const Words& values) {
  return AddPublic(party, ShareVec(values.size()), values);
}

ShareVec ComponentShare(const Party& party, int j, const Words& own_a,
                        const Words& own_b) {
  const std::size_t n = own_a.size();
  ShareVec out(n);
  if (party.index() == j) out.a = own_a;
  if ((party.index() + 1) % kNumParties == j) out.b = own_b;
  return out;
}

ShareVec SumAll(const ShareVec& x) {
  ShareVec out(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.a[0] += x.a[i];
    out.b[0] += x.b[i];
  }
  return out;
}

Words CrossTerms(const ShareVec& x, const ShareVec& y) {
  CheckSizes(x, y);
  Words z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x.a[i] * y.a[i] + x.a[i] * y.b[i] + x.b[i] * y.a[i];
  }
  return z;
}

void AccumulateCross(const ShareVec& x, std::size_t xi, const ShareVec& y,
                     std::size_t yi, uint64_t& acc) {
  acc += x.a[xi] * y.a[yi] + x.a[xi] * y.b[yi] + x.b[xi] * y.a[yi];
}

ShareVec Reshare(Party& party, Words z) {
  const Words u = party.ZeroShare(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += u[i];
  party.Send(party.prev(), z);
  Words from_next = party.Recv(party.next());
  party.CountRound();
  return ShareVec(std::move(z), std::move(from_next));
}

ShareVec Mul(Party& party, const ShareVec& x, const ShareVec& y) {
  party.CountOp("mul", x.size());
  return Reshare(party, CrossTerms(x, y));
}

ShareVec InnerProducts(Party& party, const ShareVec& x, const ShareVec& y,
                       std::size_t len) {
  CheckSizes(x, y);
  if (len == 0 || x.size() % len != 0) {
    throw ParameterError("inner product length does not divide the input");
  }
  const std::size_t groups = x.size() / len;
  Words z(groups, 0);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t k = 0; k < len; ++k) {
      AccumulateCross(x, g * len + k, y, g * len + k, z[g]);
    }
  }
  party.CountOp("dot", groups);
  return Reshare(party, std::move(z));
}

ShareVec MatMul(Party& party, const ShareVec& x, const ShareVec& w,
                std::size_t n, std::size_t k, std::size_t m) {
  if (x.size() != n * k || w.size() != k * m) {
    throw ParameterError("matmul shape mismatch");
  }
  Words z(n * m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t j = 0; j < m; ++j) {
        AccumulateCross(x, i * k + t, w, t * m + j, z[i * m + j]);
      }
    }
  }
  party.CountOp("matmul", n * m);
  return Reshare(party, std::move(z));
}

ShareVec MatMulTransposeLeft(Party& party, const ShareVec& x,
                             const ShareVec& e, std::size_t n, std::size_t k,
                             std::size_t m) {
  if (x.size() != n * k || e.size() != n * m) {
    throw ParameterError("matmul shape mismatch");
  }
  Words z(k * m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t j = 0; j < m; ++j) {
        AccumulateCross(x, i * k + t, e, i * m + j, z[t * m + j]);
      }
    }
  }
  party.CountOp("matmul", k * m);
  return Reshare(party, std::move(z));
}

Words Open(Party& party, const ShareVec& x, const std::string& what) {
  party.Send(party.next(), x.a);
  const Words missing = party.Recv(party.prev());
  party.CountRound();
  if (missing.size() != x.size()) throw IntegrityError("opening size mismatch");
  Words out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x.a[i] + x.b[i] + missing[i];
  }
  party.LogOpening(what, out);
  return out;
}

Words RevealTo(Party& party, const ShareVec& x, int target,
               const std::string& what) {
  const int helper = (target + 2) % kNumParties;
  Words out;
  if (party.index() == helper) {
    party.Send(target, x.a);
  } else if (party.index() == target) {
    const Words missing = party.Recv(helper);
    if (missing.size() != x.size()) {
      throw IntegrityError("reveal size mismatch");
    }
    out.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = x.a[i] + x.b[i] + missing[i];
    }
  }
  party.CountRound();
  party.LogEnclaveReveal(what, x.size());
  return out;
}

ShareVec Input(Party& party, int dealer, const Words& values, std::size_t n) {
  // Components d and d+1 come from the pairwise streams; the dealer sends
  // the remaining component to both other parties.
  auto [ra, rb] = party.Correlated(Stream::kRand, n);
  const int i = party.index();
  ShareVec out(n);
  if (i == dealer) {
    if (values.size() != n) throw ParameterError("input length mismatch");
    Words last(n);
    for (std::size_t k = 0; k < n; ++k) last[k] = values[k] - ra[k] - rb[k];
    party.Send(party.next(), last);
    party.Send(party.prev(), last);
    out.a = std::move(ra);
    out.b = std::move(rb);
  } else if (i == (dealer + 1) % kNumParties) {
    out.a = std::move(ra);
    out.b = party.Recv(dealer);
  } else {
    out.a = party.Recv(dealer);
    out.b = std::move(rb);
  }
  if (out.a.size() != n || out.b.size() != n) {
    throw IntegrityError("input size mismatch");
  }
  party.CountRound();
  return out;
}

}  // namespace mpcsdg
