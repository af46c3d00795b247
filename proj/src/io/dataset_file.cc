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


#include "mpcsdg/io/dataset_file.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mpcsdg/errors.h"

namespace mpcsdg {

namespace {

std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  for (auto& c : cells) {
    const auto b = c.find_first_not_of(" \t");
    const auto e = c.find_last_not_of(" \t\r");
    c = b == std::string::npos ? "" : c.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

ClearDataset ParseDataset(std::istream& in) {
  ClearDataset out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto cells = SplitCells(line);
    if (header) {
      if (cells.back() != "label") {
        throw ParseError("last header column must be 'label'", line_no,
                         cells.size());
      }
      for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
        if (cells[c].empty()) {
          throw ParseError("empty column name", line_no, c + 1);
        }
        out.gene_names.push_back(cells[c]);
      }
      width = cells.size();
      header = false;
      continue;
    }
    const std::string row = "row " + std::to_string(out.rows() + 1) + ": ";
    if (cells.size() != width) {
      throw ParseError(row + "expected " + std::to_string(width) + " cells, found " +
                           std::to_string(cells.size()),
                       line_no);
    }
    for (std::size_t c = 0; c + 1 < width; ++c) {
      double v = 0;
      const auto& s = cells[c];
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() ||
          res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError(row + "not a number: '" + s + "'", line_no, c + 1);
      }
      out.genes.push_back(v);
    }
    const auto& s = cells.back();
    int label = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), label);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() ||
        label < 0 || label > 4) {
      throw ParseError(row + "label must be an integer in 0..4, got '" + s + "'",
                       line_no, width);
    }
    out.labels.push_back(label);
  }
  if (header) throw ParseError("missing header row", line_no == 0 ? 1 : line_no);
  return out;
}

ClearDataset ReadDataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return ParseDataset(in);
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void FormatDataset(const ClearDataset& data, std::ostream& out) {
  for (const auto& name : data.gene_names) out << name << ',';
  out << "label\n";
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t g = 0; g < data.d(); ++g) {
      out << FormatDouble(data.gene(r, g)) << ',';
    }
    out << data.labels[r] << '\n';
  }
}

void WriteDataset(const ClearDataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  FormatDataset(data, out);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace mpcsdg
