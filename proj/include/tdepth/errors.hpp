// Copyright 2026 The tdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace tdepth {

/// Malformed textual input. Carries a 1-based line/column when known.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0,
              std::size_t column = 0)
      : std::runtime_error(decorate(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line,
                              std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation not defined at the circuit's granularity (e.g. T metrics on a
/// Toffoli-level circuit).
class GranularityError : public std::logic_error {
  using std::logic_error::logic_error;
};

class AllocationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Embedded data failed a self-consistency check.
class IntegrityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SizeError : public std::length_error {
  using std::length_error::length_error;
};

}  // namespace tdepth
