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

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "tdepth/circuit.hpp"
#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

std::string q(Qubit qubit) { return "q[" + std::to_string(index(qubit)) + "]"; }
std::string c(Cbit bit) { return "c[" + std::to_string(index(bit)) + "]"; }

std::string operand_list(const Gate& g) {
  std::string out;
  for (Qubit qubit : g.operands()) {
    if (!out.empty()) out += ", ";
    out += q(qubit);
  }
  return out;
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

}  // namespace

std::string export_text(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "// granularity: " << to_string(circuit.granularity()) << '\n';
  out << "qreg q[" << circuit.qubit_count() << "];\n";
  if (circuit.cbit_count() > 0) {
    out << "creg c[" << circuit.cbit_count() << "];\n";
  }
  for (std::size_t i = 0; i < circuit.qubit_count(); ++i) {
    out << "// q[" << i << "]: " << to_string(circuit.roles()[i]) << '\n';
  }
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::Uncompute:
        out << "ccx " << operand_list(g) << "; // uncompute\n";
        break;
      case GateKind::MeasureX:
        out << "h " << q(g.target()) << "; measure " << q(g.target()) << " -> "
            << c(g.cbit) << ";\n";
        break;
      case GateKind::MeasureZ:
        out << "measure " << q(g.target()) << " -> " << c(g.cbit) << ";\n";
        break;
      case GateKind::Correct:
        out << "if (" << c(g.cbit) << " == 1) " << to_string(g.correction)
            << ' ' << operand_list(g) << ";\n";
        break;
      default:
        out << to_string(g.kind) << ' ' << operand_list(g) << ";\n";
    }
  }
  return out.str();
}

namespace {

class StatementParser {
 public:
  StatementParser(std::string_view text, std::size_t lineno)
      : text_(trim(text)), lineno_(lineno) {}

  std::string_view word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  void expect(std::string_view token) {
    skip();
    if (!text_.substr(pos_).starts_with(token)) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint32_t indexed(char reg) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != reg) {
      fail(std::string("expected register '") + reg + "'");
    }
    ++pos_;
    expect("[");
    skip();
    std::uint32_t value = 0;
    auto [end, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected an index");
    pos_ = static_cast<std::size_t>(end - text_.data());
    expect("]");
    return value;
  }

  std::vector<Qubit> qubit_list() {
    std::vector<Qubit> out;
    do {
      out.push_back(Qubit{indexed('q')});
    } while (accept(','));
    return out;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError(message, lineno_, pos_ + 1);
  }

 private:
  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

std::optional<GateKind> kind_from_name(std::string_view name) {
  static constexpr GateKind kPlain[] = {
      GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::T,
      GateKind::Tdg, GateKind::X, GateKind::Z,   GateKind::CZ,
      GateKind::CNOT, GateKind::Toffoli};
  for (GateKind k : kPlain) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Gate plain_gate(GateKind kind, const std::vector<Qubit>& qs,
                const StatementParser& p) {
  auto need = [&](std::size_t n) {
    if (qs.size() != n) p.fail("wrong operand count");
  };
  switch (kind) {
    case GateKind::CZ: need(2); return gates::cz(qs[0], qs[1]);
    case GateKind::CNOT: need(2); return gates::cnot(qs[0], qs[1]);
    case GateKind::Toffoli: need(3); return gates::toffoli(qs[0], qs[1], qs[2]);
    case GateKind::H: need(1); return gates::h(qs[0]);
    case GateKind::S: need(1); return gates::s(qs[0]);
    case GateKind::Sdg: need(1); return gates::sdg(qs[0]);
    case GateKind::T: need(1); return gates::t(qs[0]);
    case GateKind::Tdg: need(1); return gates::tdg(qs[0]);
    case GateKind::X: need(1); return gates::x(qs[0]);
    case GateKind::Z: need(1); return gates::z(qs[0]);
    default: p.fail("unsupported gate");
  }
}

std::vector<std::string_view> split_statements(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < line.size()) {
    std::size_t end = line.find(';', start);
    if (end == std::string_view::npos) end = line.size();
    auto s = trim(line.substr(start, end - start));
    if (!s.empty()) out.push_back(s);
    start = end + 1;
  }
  return out;
}

Gate parse_gate_line(std::string_view line, std::size_t lineno) {
  bool uncompute = false;
  if (auto pos = line.find("//"); pos != std::string_view::npos) {
    uncompute = trim(line.substr(pos + 2)) == "uncompute";
    line = line.substr(0, pos);
  }
  const auto statements = split_statements(line);
  if (statements.size() == 2) {
    // X-basis measurement: "h q[i]; measure q[i] -> c[j];"
    StatementParser first(statements[0], lineno);
    if (first.word() != "h") first.fail("expected 'h' before measure");
    const Qubit qubit{first.indexed('q')};
    first.finish();
    StatementParser second(statements[1], lineno);
    if (second.word() != "measure") second.fail("expected 'measure'");
    if (Qubit{second.indexed('q')} != qubit) {
      second.fail("X-basis measurement must act on one qubit");
    }
    second.expect("->");
    const Cbit bit{second.indexed('c')};
    second.finish();
    return gates::measure_x(qubit, bit);
  }
  if (statements.size() != 1) {
    throw FormatError("expected one gate per line", lineno);
  }
  StatementParser p(statements[0], lineno);
  const auto name = p.word();
  if (name == "measure") {
    const Qubit qubit{p.indexed('q')};
    p.expect("->");
    const Cbit bit{p.indexed('c')};
    p.finish();
    return gates::measure_z(qubit, bit);
  }
  if (name == "if") {
    p.expect("(");
    const Cbit bit{p.indexed('c')};
    p.expect("==");
    p.expect("1");
    p.expect(")");
    const auto kind = kind_from_name(p.word());
    const auto qs = p.qubit_list();
    p.finish();
    if (kind == GateKind::CZ && qs.size() == 2) {
      return gates::correct(bit, GateKind::CZ, {qs[0], qs[1]});
    }
    if ((kind == GateKind::X || kind == GateKind::Z) && qs.size() == 1) {
      return gates::correct(bit, *kind, {qs[0]});
    }
    p.fail("corrections must be x, z or cz");
  }
  const auto kind = kind_from_name(name);
  if (!kind) p.fail("unknown gate '" + std::string(name) + "'");
  const auto qs = p.qubit_list();
  p.finish();
  Gate g = plain_gate(*kind, qs, p);
  if (uncompute) {
    if (g.kind != GateKind::Toffoli) p.fail("only ccx can be an uncompute");
    g.kind = GateKind::Uncompute;
  }
  return g;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim(text.substr(start, end - start)));
    start = end + 1;
  }

  Granularity granularity = Granularity::CliffordT;
  std::optional<std::size_t> qreg;
  std::size_t creg = 0;
  std::vector<std::optional<QubitRole>> roles;
  std::vector<std::size_t> gate_lines;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const std::size_t lineno = i + 1;
    if (line.empty() || line.starts_with("OPENQASM") ||
        line.starts_with("include")) {
      continue;
    }
    if (line.starts_with("//")) {
      const auto body = trim(line.substr(2));
      if (body.starts_with("granularity:")) {
        const auto g = trim(body.substr(12));
        if (g == "toffoli") {
          granularity = Granularity::Toffoli;
        } else if (g == "clifford-t") {
          granularity = Granularity::CliffordT;
        } else {
          throw FormatError("unknown granularity", lineno);
        }
      } else if (body.starts_with("q[")) {
        StatementParser p(body.substr(0, body.find(':')), lineno);
        const auto idx = p.indexed('q');
        if (!qreg || idx >= *qreg) {
          throw FormatError("role comment for undeclared qubit", lineno);
        }
        roles[idx] = parse_role(trim(body.substr(body.find(':') + 1)));
      }
      continue;
    }
    if (line.starts_with("qreg") || line.starts_with("creg")) {
      StatementParser p(line.substr(4, line.find(';') - 4), lineno);
      const auto size = p.indexed(line[0] == 'q' ? 'q' : 'c');
      p.finish();
      if (line[0] == 'q') {
        qreg = size;
        roles.assign(size, std::nullopt);
      } else {
        creg = size;
      }
      continue;
    }
    gate_lines.push_back(i);
  }

  if (!qreg) throw FormatError("missing qreg declaration");
  Circuit circuit(granularity);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (!roles[i]) {
      throw FormatError("qubit q[" + std::to_string(i) + "] has no role");
    }
    circuit.add_qubit(*roles[i]);
  }
  for (std::size_t i = 0; i < creg; ++i) circuit.add_cbit();
  for (std::size_t i : gate_lines) {
    try {
      circuit.append(parse_gate_line(lines[i], i + 1));
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw FormatError(e.what(), i + 1);
    }
  }
  return circuit;
}

}  // namespace tdepth
