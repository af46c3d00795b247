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

#include <vector>

#include "mpcsdg/rss/share.h"
#include "mpcsdg/runtime/party.h"

namespace mpcsdg {

// Padding value for the sorting network; larger than any in-range value.
inline constexpr uint64_t kSortSentinel = uint64_t{1} << 60;

// Sorts each vector ascending (signed) with a bitonic network. All vectors
// must have the same length; their compare-swaps share rounds. The sequence
// of operations depends only on the length.
std::vector<ShareVec> SortColumns(Party& party,
                                  const std::vector<ShareVec>& columns);
ShareVec Sort(Party& party, const ShareVec& v);

}  // namespace mpcsdg
