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

#include <array>
#include <cstddef>
#include <vector>

#include "mpcsdg/ring/fixed_point.h"
#include "mpcsdg/runtime/prg.h"

namespace mpcsdg {

// One party's view of a vector of arithmetic secrets: party i holds the
// components (x_i, x_{i+1}) of x = x_0 + x_1 + x_2 mod 2^64.
struct ShareVec {
  Words a;
  Words b;

  ShareVec() = default;
  explicit ShareVec(std::size_t n) : a(n, 0), b(n, 0) {}
  ShareVec(Words a_in, Words b_in) : a(std::move(a_in)), b(std::move(b_in)) {}

  std::size_t size() const { return a.size(); }
  bool empty() const { return a.empty(); }
  void Append(const ShareVec& other);
  ShareVec Slice(std::size_t begin, std::size_t count) const;
  // Elements at the given indices, in order.
  ShareVec Gather(const std::vector<std::size_t>& idx) const;
};

// Same layout, XOR sharing of 64-bit words.
struct BoolVec {
  Words a;
  Words b;

  BoolVec() = default;
  explicit BoolVec(std::size_t n) : a(n, 0), b(n, 0) {}
  BoolVec(Words a_in, Words b_in) : a(std::move(a_in)), b(std::move(b_in)) {}

  std::size_t size() const { return a.size(); }
};

// Row-major secret matrix with public shape.
struct ShareMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ShareVec cells;

  ShareMatrix() = default;
  ShareMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c) {}

  ShareVec Column(std::size_t c) const;
  void SetColumn(std::size_t c, const ShareVec& v);
  // Columns [begin, begin + count), row-major.
  ShareMatrix Columns(std::size_t begin, std::size_t count) const;
  ShareMatrix Rows(const std::vector<std::size_t>& idx) const;
};

// Row-stacks matrices with identical column counts.
ShareMatrix StackRows(const std::vector<ShareMatrix>& parts);

// Dealer-side sharing: x_1, x_2 uniform from `rng`, x_3 = x - x_1 - x_2.
// Element p of the result is party p's view.
std::array<ShareVec, 3> ShareValues(const Words& values, Prg& rng);

// Sums the components; throws IntegrityError when adjacent parties disagree
// on their common component.
Words Reconstruct(const std::array<ShareVec, 3>& views);
Words ReconstructBool(const std::array<BoolVec, 3>& views);

}  // namespace mpcsdg
