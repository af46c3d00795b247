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


#include "mpcsdg/rss/share.h"

#include "mpcsdg/errors.h"

namespace mpcsdg {

void ShareVec::Append(const ShareVec& other) {
  a.insert(a.end(), other.a.begin(), other.a.end());
  b.insert(b.end(), other.b.begin(), other.b.end());
}

ShareVec ShareVec::Slice(std::size_t begin, std::size_t count) const {
  if (begin + count > size()) throw ParameterError("slice out of range");
  return ShareVec(Words(a.begin() + begin, a.begin() + begin + count),
                  Words(b.begin() + begin, b.begin() + begin + count));
}

ShareVec ShareVec::Gather(const std::vector<std::size_t>& idx) const {
  ShareVec out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= size()) throw ParameterError("gather index out of range");
    out.a[i] = a[idx[i]];
    out.b[i] = b[idx[i]];
  }
  return out;
}

ShareVec ShareMatrix::Column(std::size_t c) const {
  ShareVec out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    out.a[r] = cells.a[r * cols + c];
    out.b[r] = cells.b[r * cols + c];
  }
  return out;
}

void ShareMatrix::SetColumn(std::size_t c, const ShareVec& v) {
  if (v.size() != rows) throw ParameterError("column length mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    cells.a[r * cols + c] = v.a[r];
    cells.b[r * cols + c] = v.b[r];
  }
}

ShareMatrix ShareMatrix::Columns(std::size_t begin, std::size_t count) const {
  ShareMatrix out(rows, count);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < count; ++c) {
      out.cells.a[r * count + c] = cells.a[r * cols + begin + c];
      out.cells.b[r * count + c] = cells.b[r * cols + begin + c];
    }
  }
  return out;
}

ShareMatrix ShareMatrix::Rows(const std::vector<std::size_t>& idx) const {
  ShareMatrix out(idx.size(), cols);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows) throw ParameterError("row index out of range");
    for (std::size_t c = 0; c < cols; ++c) {
      out.cells.a[i * cols + c] = cells.a[idx[i] * cols + c];
      out.cells.b[i * cols + c] = cells.b[idx[i] * cols + c];
    }
  }
  return out;
}

ShareMatrix StackRows(const std::vector<ShareMatrix>& parts) {
  ShareMatrix out;
  if (parts.empty()) return out;
  out.cols = parts[0].cols;
  for (const auto& p : parts) {
    if (p.cols != out.cols) throw ParameterError("column count mismatch");
    out.rows += p.rows;
    out.cells.Append(p.cells);
  }
  return out;
}

std::array<ShareVec, 3> ShareValues(const Words& values, Prg& rng) {
  const std::size_t n = values.size();
  const Words x1 = rng.Next(n);
  const Words x2 = rng.Next(n);
  Words x0(n);
  for (std::size_t i = 0; i < n; ++i) x0[i] = values[i] - x1[i] - x2[i];
  return {ShareVec(x0, x1), ShareVec(x1, x2), ShareVec(x2, x0)};
}

namespace {

template <typename V>
void CheckOverlap(const std::array<V, 3>& v) {
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (v[i].size() != v[j].size() || v[i].b != v[j].a) {
      throw IntegrityError("parties " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) +
                           " disagree on a shared component");
    }
  }
}

}  // namespace

Words Reconstruct(const std::array<ShareVec, 3>& views) {
  CheckOverlap(views);
  Words out(views[0].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = views[0].a[i] + views[1].a[i] + views[2].a[i];
  }
  return out;
}

Words ReconstructBool(const std::array<BoolVec, 3>& views) {
  CheckOverlap(views);
  Words out(views[0].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = views[0].a[i] ^ views[1].a[i] ^ views[2].a[i];
  }
  return out;
}

}  // namespace mpcsdg
