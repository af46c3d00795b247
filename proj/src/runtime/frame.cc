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

#include "mpcsdg/runtime/frame.h"

#include <cstring>
#include <limits>

#include "mpcsdg/errors.h"

namespace mpcsdg {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kNone: return "OTHER";
    case Label::kSetup: return "SETUP";
    case Label::kInput: return "INPUT";
    case Label::kConcat: return "CONCAT";
    case Label::kBin: return "BIN";
    case Label::kBinTest: return "BIN-TEST";
    case Label::kInvBin: return "INV-BIN";
    case Label::kSort: return "SORT";
    case Label::kNoisyMarg: return "NOISY-MARG";
    case Label::kGauss: return "GAUSS";
    case Label::kSdg: return "SDG";
    case Label::kEval: return "EVAL";
    case Label::kLr: return "LR";
    case Label::kWle: return "WLE";
    case Label::kAvg: return "AVG";
    case Label::kVote: return "VOTE";
    case Label::kReveal: return "REVEAL";
  }
  return "UNKNOWN";
}

std::optional<Label> LabelFromId(uint16_t id) {
  for (Label l : kAllLabels) {
    if (static_cast<uint16_t>(l) == id) return l;
  }
  return std::nullopt;
}

namespace {

void PutBigEndian(std::vector<uint8_t>& out, uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) {
    out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
}

uint64_t GetBigEndian(const uint8_t* p, int bytes) {
  uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::vector<uint8_t> SerializeFrame(const TransportFrame& frame) {
  const std::size_t body = 2 + 8 + 8 * frame.payload.size();
  if (body > std::numeric_limits<uint32_t>::max()) {
    throw TransportError("frame payload too large");
  }
  std::vector<uint8_t> out;
  out.reserve(4 + body);
  PutBigEndian(out, body, 4);
  PutBigEndian(out, static_cast<uint16_t>(frame.label), 2);
  PutBigEndian(out, frame.sequence, 8);
  for (uint64_t w : frame.payload) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(w >> (8 * i)));
  }
  return out;
}

TransportFrame ParseFrameBody(const uint8_t* body, std::size_t size) {
  if (size < 10 || (size - 10) % 8 != 0) {
    throw IntegrityError("malformed frame body of " + std::to_string(size) +
                         " bytes");
  }
  TransportFrame frame;
  const auto label = LabelFromId(static_cast<uint16_t>(GetBigEndian(body, 2)));
  if (!label) throw IntegrityError("unknown protocol label on the wire");
  frame.label = *label;
  frame.sequence = GetBigEndian(body + 2, 8);
  const std::size_t n = (size - 10) / 8;
  frame.payload.resize(n);
  const uint8_t* p = body + 10;
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t w = 0;
    for (int b = 7; b >= 0; --b) w = (w << 8) | p[8 * i + b];
    frame.payload[i] = w;
  }
  return frame;
}

Words PackString(std::string_view s) {
  Words out;
  out.push_back(s.size());
  for (std::size_t i = 0; i < s.size(); i += 8) {
    uint64_t w = 0;
    for (std::size_t b = 0; b < 8 && i + b < s.size(); ++b) {
      w |= uint64_t{static_cast<uint8_t>(s[i + b])} << (8 * b);
    }
    out.push_back(w);
  }
  return out;
}

std::string UnpackString(const Words& words, std::size_t& offset) {
  if (offset >= words.size()) throw IntegrityError("truncated string field");
  const uint64_t len = words[offset++];
  const std::size_t nwords = (len + 7) / 8;
  if (len > (1u << 24) || offset + nwords > words.size()) {
    throw IntegrityError("truncated string field");
  }
  std::string s(len, '\0');
  for (std::size_t i = 0; i < len; ++i) {
    s[i] = static_cast<char>(words[offset + i / 8] >> (8 * (i % 8)));
  }
  offset += nwords;
  return s;
}

}  // namespace mpcsdg
