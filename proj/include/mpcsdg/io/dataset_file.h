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

#include <iosfwd>
#include <string>
#include <vector>

namespace mpcsdg {

// Cleartext dataset: gene columns of reals followed by an integer label in
// {0..4}.
struct ClearDataset {
  std::vector<std::string> gene_names;
  std::vector<double> genes;  // row-major, rows x d
  std::vector<int> labels;

  std::size_t rows() const { return labels.size(); }
  std::size_t d() const { return gene_names.size(); }
  double gene(std::size_t r, std::size_t g) const { return genes[r * d() + g]; }
};

// Comma-separated text with a header row whose last column is `label`.
// Throws ParseError with the 1-based line and column of the first problem.
ClearDataset ParseDataset(std::istream& in);
ClearDataset ReadDataset(const std::string& path);

// Shortest round-trip decimal formatting.
void FormatDataset(const ClearDataset& data, std::ostream& out);
void WriteDataset(const ClearDataset& data, const std::string& path);

std::string FormatDouble(double v);

}  // namespace mpcsdg
