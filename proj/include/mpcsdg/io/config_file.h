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

#include <istream>
#include <string>

#include "mpcsdg/pipeline/config.h"

namespace mpcsdg {

// Flat "key = value" text; '#' starts a comment; lists are comma-separated.
// Unset keys keep their defaults. Throws ParseError with line and column.
PipelineConfig ParseConfig(std::istream& in);
PipelineConfig ReadConfig(const std::string& path);

// Requires both max_wle and min_accuracy. Values may be "inf" or "-inf".
Thresholds ParseThresholds(std::istream& in);
Thresholds ReadThresholds(const std::string& path);

}  // namespace mpcsdg
