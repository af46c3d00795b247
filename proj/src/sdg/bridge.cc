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


#include "mpcsdg/sdg/bridge.h"

#include "mpcsdg/errors.h"
#include "mpcsdg/rss/arith.h"

namespace mpcsdg {

ClearMarginals DecodeMarginals(const Words& opened, std::size_t genes,
                               int scale_bits) {
  if (opened.size() != genes * 4 + 5 + genes * kJointCells) {
    throw ParameterError("marginal vector has the wrong length");
  }
  ClearMarginals m;
  m.genes = genes;
  std::size_t k = 0;
  for (std::size_t i = 0; i < genes * 4; ++i) {
    m.gene.push_back(DecodeScaled(opened[k++], scale_bits));
  }
  for (int i = 0; i < 5; ++i) {
    m.label.push_back(DecodeScaled(opened[k++], scale_bits));
  }
  for (std::size_t i = 0; i < genes * kJointCells; ++i) {
    m.joint.push_back(DecodeScaled(opened[k++], scale_bits));
  }
  return m;
}

ShareMatrix SecureGenerate(Party& party, const MarginalSet& noisy,
                           const GeneratorRequest& request) {
  Party::Scope scope(party, Label::kSdg);
  const std::size_t d = noisy.genes;
  const std::size_t n_cells = request.n_out * (d + 1);
  const Words opened =
      RevealTo(party, noisy.Flatten(), kEnclaveParty, "noisy marginals");
  Words cells;
  if (party.index() == kEnclaveParty) {
    const BinnedTable table = GenerateSynthetic(
        DecodeMarginals(opened, d, noisy.scale_bits), request.n_out,
        request.iterations, request.seed);
    cells.resize(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) {
      cells[i] = static_cast<uint64_t>(table.cells[i]);
    }
  }
  ShareMatrix out(request.n_out, d + 1);
  out.cells = Input(party, kEnclaveParty, cells, n_cells);
  return out;
}

}  // namespace mpcsdg
