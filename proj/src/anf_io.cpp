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

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "tdepth/anf.hpp"
#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

constexpr std::string_view kXorSymbol = "\xE2\x8A\x95";  // U+2295

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

/// Cursor over one line of ANF text; columns are 1-based byte offsets.
class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t lineno)
      : line_(line), lineno_(lineno) {}

  void skip_space() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ == line_.size();
  }
  char peek() {
    skip_space();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_plus() {
    if (accept('+')) return true;
    if (line_.substr(pos_).starts_with(kXorSymbol)) {
      pos_ += kXorSymbol.size();
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view word) {
    skip_space();
    if (!line_.substr(pos_).starts_with(word)) return false;
    pos_ += word.size();
    return true;
  }
  std::size_t column() const { return pos_ + 1; }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    auto [end, ec] =
        std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc{} || value < 0) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(end - line_.data());
    if (pos_ == start) fail("expected a non-negative integer");
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError(message, lineno_, column());
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

struct ParsedLine {
  bool constant = false;
  std::vector<Monomial> monomials;
  std::vector<std::pair<int, std::size_t>> var_columns;  // (index, column)
};

ParsedLine parse_anf_line(std::string_view text, std::size_t lineno) {
  LineCursor cur(text, lineno);
  ParsedLine out;
  if (cur.peek() == '0') {
    cur.accept('0');
    if (!cur.done()) cur.fail("'0' must stand alone on its line");
    return out;
  }
  do {
    if (cur.accept('1')) {
      out.constant = !out.constant;
      continue;
    }
    std::uint64_t mask = 0;
    do {
      if (!cur.accept('x')) cur.fail("expected 'x<index>' or '1'");
      const std::size_t column = cur.column();
      const int index = cur.integer();
      if (index >= kMaxArity) {
        throw FormatError("variable index exceeds 63", lineno, column);
      }
      out.var_columns.emplace_back(index, column);
      mask |= std::uint64_t{1} << index;
    } while (cur.accept('*'));
    out.monomials.push_back(Monomial::from_mask(mask));
  } while (cur.accept_plus());
  if (!cur.done()) cur.fail("unexpected character");
  return out;
}

std::uint64_t parse_table_integer(std::string_view token, std::size_t lineno) {
  std::uint64_t value = 0;
  int base = 10;
  if (token.starts_with("0x") || token.starts_with("0X")) {
    token.remove_prefix(2);
    base = 16;
  }
  auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value, base);
  if (ec != std::errc{} || end != token.data() + token.size() ||
      token.empty()) {
    throw FormatError("bad table entry '" + std::string(token) + "'", lineno);
  }
  return value;
}

TruthTable parse_table_line(std::string_view line, std::size_t lineno) {
  TruthTable bits;
  if (line.starts_with("0x") || line.starts_with("0X")) {
    const std::string_view digits = line.substr(2);
    bits.assign(digits.size() * 4, 0);
    for (std::size_t p = 0; p < digits.size(); ++p) {
      const char c = digits[p];
      int v = 0;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        throw FormatError("bad hex digit", lineno, p + 3);
      }
      // Leftmost digit is most significant.
      const std::size_t base = 4 * (digits.size() - 1 - p);
      for (int b = 0; b < 4; ++b) bits[base + b] = (v >> b) & 1;
    }
  } else {
    bits.reserve(line.size());
    for (std::size_t p = 0; p < line.size(); ++p) {
      if (line[p] != '0' && line[p] != '1') {
        throw FormatError("truth table characters must be 0 or 1", lineno,
                          p + 1);
      }
      bits.push_back(line[p] == '1');
    }
  }
  if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
    throw FormatError("truth table length must be a power of two >= 2",
                      lineno);
  }
  return bits;
}

}  // namespace

MultiOutputFunction parse_anf(std::string_view text) {
  const auto lines = split_lines(text);
  int declared = 0;
  std::size_t first = 0;
  while (first < lines.size() && is_blank(lines[first])) ++first;
  if (first < lines.size()) {
    LineCursor cur(lines[first], first + 1);
    if (cur.accept_word("vars")) {
      declared = cur.integer();
      if (declared < 1 || declared > kMaxArity) {
        cur.fail("declared arity must be in [1, 64]");
      }
      if (!cur.done()) cur.fail("unexpected text after header");
      ++first;
    }
  }

  std::vector<ParsedLine> parsed;
  std::vector<std::size_t> linenos;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    parsed.push_back(parse_anf_line(lines[i], i + 1));
    linenos.push_back(i + 1);
  }
  if (parsed.empty()) throw FormatError("no coordinate lines");

  int n = declared;
  if (n == 0) {
    n = 1;
    for (const auto& p : parsed) {
      for (auto [index, column] : p.var_columns) n = std::max(n, index + 1);
    }
  }
  std::vector<BooleanFunction> coords;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    for (auto [index, column] : parsed[i].var_columns) {
      if (index >= n) {
        throw FormatError("variable x" + std::to_string(index) +
                              " exceeds declared arity " + std::to_string(n),
                          linenos[i], column);
      }
    }
    coords.emplace_back(n, parsed[i].constant, std::move(parsed[i].monomials));
  }
  return MultiOutputFunction(std::move(coords));
}

std::string serialize_anf(const MultiOutputFunction& f) {
  std::string out = "vars " + std::to_string(f.arity()) + "\n";
  for (const auto& c : f.coordinates()) {
    std::string line;
    if (c.constant_term()) line = "1";
    for (Monomial m : c.monomials()) {
      if (!line.empty()) line += " + ";
      line += to_string(m);
    }
    out += line.empty() ? "0" : line;
    out += '\n';
  }
  return out;
}

MultiOutputFunction parse_truth_tables(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && is_blank(lines[first])) ++first;
  if (first == lines.size()) throw FormatError("empty truth table input");

  if (trim(lines[first]).starts_with("vars")) {
    LineCursor cur(lines[first], first + 1);
    cur.accept_word("vars");
    const int n = cur.integer();
    if (!cur.accept_word("outs")) cur.fail("expected 'outs <m>'");
    const int m = cur.integer();
    if (!cur.done()) cur.fail("unexpected text after header");
    if (n < 1 || n > kMaxTableArity) {
      throw FormatError("table arity must be in [1, 24]", first + 1);
    }
    if (m < 1 || m > kMaxOutputs) {
      throw FormatError("output count must be in [1, 64]", first + 1);
    }
    std::vector<std::uint64_t> table;
    for (std::size_t i = first + 1; i < lines.size(); ++i) {
      std::istringstream words{std::string(lines[i])};
      std::string token;
      while (words >> token) {
        const auto v = parse_table_integer(token, i + 1);
        if (m < 64 && v >> m != 0) {
          throw FormatError("table entry " + token + " does not fit in " +
                                std::to_string(m) + " bits",
                            i + 1);
        }
        table.push_back(v);
      }
    }
    if (table.size() != (std::size_t{1} << n)) {
      throw FormatError("expected " + std::to_string(std::size_t{1} << n) +
                        " table entries, found " +
                        std::to_string(table.size()));
    }
    return from_lookup_table(table, m);
  }

  std::vector<BooleanFunction> coords;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    auto bits = parse_table_line(line, i + 1);
    if (!coords.empty() &&
        bits.size() != (std::size_t{1} << coords.front().arity())) {
      throw FormatError("coordinate tables differ in length", i + 1);
    }
    coords.push_back(anf_from_truth_table(bits));
  }
  return MultiOutputFunction(std::move(coords));
}

std::string serialize_truth_tables(const MultiOutputFunction& f) {
  std::string out;
  for (const auto& c : f.coordinates()) {
    for (auto b : c.truth_table()) out += b ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace tdepth
