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


#include "mpcsdg/io/config_file.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "mpcsdg/errors.h"

namespace mpcsdg {
namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // of the value
};

std::string Trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

std::map<std::string, Entry> ParseKeyValues(std::istream& in) {
  std::map<std::string, Entry> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (Trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", line, 1);
    }
    const std::string key = Trim(raw.substr(0, eq));
    if (key.empty()) throw ParseError("empty key", line, 1);
    std::size_t lead = 0;
    const std::string value = Trim(raw.substr(eq + 1), &lead);
    if (out.count(key)) {
      throw ParseError("duplicate key '" + key + "'", line, 1);
    }
    out[key] = {value, line, eq + 2 + lead};
  }
  return out;
}

double ToDouble(const Entry& e, const std::string& key) {
  const std::string& v = e.value;
  if (v == "inf" || v == "+inf") return HUGE_VAL;
  if (v == "-inf") return -HUGE_VAL;
  double out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty()) {
    throw ParseError(key + ": '" + v + "' is not a number", e.line, e.column);
  }
  return out;
}

template <typename T>
T ToInteger(const std::string& v, const Entry& e, const std::string& key) {
  T out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty()) {
    throw ParseError(key + ": '" + v + "' is not an integer", e.line, e.column);
  }
  return out;
}

bool ToBool(const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  throw ParseError(key + ": expected true or false", e.line, e.column);
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return in;
}

}  // namespace

PipelineConfig ParseConfig(std::istream& in) {
  PipelineConfig c;
  const auto kv = ParseKeyValues(in);
  using Setter = std::function<void(const Entry&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"folds", [&](auto& e, auto& k) { c.folds = ToInteger<int>(e.value, e, k); }},
      {"max_loops",
       [&](auto& e, auto& k) { c.max_loops = ToInteger<int>(e.value, e, k); }},
      {"hyperparameters",
       [&](auto& e, auto& k) {
         c.hyperparameters.clear();
         std::stringstream ss(e.value);
         std::string item;
         while (std::getline(ss, item, ',')) {
           c.hyperparameters.push_back(ToInteger<int>(Trim(item), e, k));
         }
       }},
      {"epsilon_s",
       [&](auto& e, auto& k) { c.synthesis.epsilon = ToDouble(e, k); }},
      {"delta_s", [&](auto& e, auto& k) { c.synthesis.delta = ToDouble(e, k); }},
      {"epsilon_p",
       [&](auto& e, auto& k) { c.preprocessing.epsilon = ToDouble(e, k); }},
      {"delta_p",
       [&](auto& e, auto& k) { c.preprocessing.delta = ToDouble(e, k); }},
      {"seed",
       [&](auto& e, auto& k) { c.seed = ToInteger<uint64_t>(e.value, e, k); }},
      {"n_custodians",
       [&](auto& e, auto& k) { c.n_custodians = ToInteger<int>(e.value, e, k); }},
      {"frac_bits",
       [&](auto& e, auto& k) { c.fp.frac_bits = ToInteger<int>(e.value, e, k); }},
      {"lr_epochs",
       [&](auto& e, auto& k) { c.lr_epochs = ToInteger<int>(e.value, e, k); }},
      {"learning_rate",
       [&](auto& e, auto& k) { c.learning_rate = ToDouble(e, k); }},
      {"publish_rows",
       [&](auto& e, auto& k) {
         c.publish_rows = ToInteger<std::size_t>(e.value, e, k);
       }},
      {"mode",
       [&](auto& e, auto&) {
         try {
           c.mode = ParseSearchMode(e.value);
         } catch (const ParameterError& err) {
           throw ParseError(err.what(), e.line, e.column);
         }
       }},
      {"loop_bin_means",
       [&](auto& e, auto& k) { c.loop_bin_means = ToBool(e, k); }},
  };
  for (const auto& [key, entry] : kv) {
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ParseError("unknown key '" + key + "'", entry.line, 1);
    }
    it->second(entry, key);
  }
  return c;
}

PipelineConfig ReadConfig(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseConfig(in);
}

Thresholds ParseThresholds(std::istream& in) {
  const auto kv = ParseKeyValues(in);
  Thresholds t;
  for (const auto& [key, entry] : kv) {
    if (key != "max_wle" && key != "min_accuracy") {
      throw ParseError("unknown key '" + key + "'", entry.line, 1);
    }
  }
  for (const char* key : {"max_wle", "min_accuracy"}) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw ParseError(std::string("missing threshold '") + key + "'", 0);
    }
    (std::string(key) == "max_wle" ? t.max_wle : t.min_accuracy) =
        ToDouble(it->second, key);
  }
  return t;
}

Thresholds ReadThresholds(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseThresholds(in);
}

}  // namespace mpcsdg
