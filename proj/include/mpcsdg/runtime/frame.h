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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpcsdg/ring/fixed_point.h"

namespace mpcsdg {

// Protocol catalog. Every byte a party sends is attributed to exactly one of
// these labels. Ids are stable: they appear on the wire.
enum class Label : uint16_t {
  kNone = 0,
  kSetup = 1,
  kInput = 2,
  kConcat = 3,
  kBin = 4,
  kBinTest = 5,
  kInvBin = 6,
  kSort = 7,
  kNoisyMarg = 8,
  kGauss = 9,
  kSdg = 10,
  kEval = 11,
  kLr = 12,
  kWle = 13,
  kAvg = 14,
  kVote = 15,
  kReveal = 16,
};

inline constexpr Label kAllLabels[] = {
    Label::kNone,    Label::kSetup,     Label::kInput,  Label::kConcat,
    Label::kBin,     Label::kBinTest,   Label::kInvBin, Label::kSort,
    Label::kNoisyMarg, Label::kGauss,   Label::kSdg,    Label::kEval,
    Label::kLr,      Label::kWle,       Label::kAvg,    Label::kVote,
    Label::kReveal};

std::string_view LabelName(Label label);
std::optional<Label> LabelFromId(uint16_t id);

struct TransportFrame {
  Label label = Label::kNone;
  uint64_t sequence = 0;
  Words payload;
};

// Wire layout: 4-byte big-endian length of everything after the length field,
// 2-byte big-endian label id, 8-byte big-endian sequence number, then the
// payload as 64-bit little-endian words.
std::vector<uint8_t> SerializeFrame(const TransportFrame& frame);

inline constexpr std::size_t kFrameHeaderBytes = 4 + 2 + 8;

// Parses the body that follows the 4-byte length. Throws IntegrityError on a
// malformed body.
TransportFrame ParseFrameBody(const uint8_t* body, std::size_t size);

// Packs bytes of a string into words (length word first) and back.
Words PackString(std::string_view s);
std::string UnpackString(const Words& words, std::size_t& offset);

}  // namespace mpcsdg
