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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpcsdg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value outside the representable fixed-point range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Shares that do not reconstruct consistently, or a desynchronized transcript.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Handshake failures: config mismatch between parties, unreachable peers.
class SetupError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class AccountingError : public Error {
 public:
  using Error::Error;
};

// Raised when a party's protocol execution fails. Carries a textual dump of the
// party's communication ledger at the moment of the abort.
class ProtocolAbort : public Error {
 public:
  ProtocolAbort(const std::string& what, std::string ledger_snapshot)
      : Error(what), ledger_snapshot_(std::move(ledger_snapshot)) {}

  const std::string& ledger_snapshot() const { return ledger_snapshot_; }

 private:
  std::string ledger_snapshot_;
};

// Malformed input files. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(Format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace mpcsdg
