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

#include "tdepth/circuit.hpp"

#include <algorithm>
#include <array>

#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

constexpr std::array<std::string_view, 6> kRoleNames = {
    "input", "output", "input-copy", "storage", "tree-node", "helper"};

Gate make(GateKind kind, std::initializer_list<Qubit> qubits) {
  Gate g;
  g.kind = kind;
  g.arity = static_cast<std::uint8_t>(qubits.size());
  std::copy(qubits.begin(), qubits.end(), g.qubits.begin());
  return g;
}

bool legal_at(GateKind kind, Granularity granularity) {
  switch (kind) {
    case GateKind::Toffoli:
    case GateKind::Uncompute:
      return granularity == Granularity::Toffoli;
    case GateKind::MeasureX:
    case GateKind::MeasureZ:
    case GateKind::Correct:
      return granularity == Granularity::CliffordT;
    default:
      return true;
  }
}

std::size_t expected_arity(const Gate& g) {
  switch (g.kind) {
    case GateKind::CZ:
    case GateKind::CNOT:
      return 2;
    case GateKind::Toffoli:
    case GateKind::Uncompute:
      return 3;
    case GateKind::Correct:
      return g.correction == GateKind::CZ ? 2 : 1;
    default:
      return 1;
  }
}

}  // namespace

std::string_view to_string(QubitRole role) {
  return kRoleNames[static_cast<std::size_t>(role)];
}

QubitRole parse_role(std::string_view name) {
  for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
    if (kRoleNames[i] == name) return static_cast<QubitRole>(i);
  }
  throw FormatError("unknown qubit role '" + std::string(name) + "'");
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::CZ: return "cz";
    case GateKind::CNOT: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::Uncompute: return "uncompute";
    case GateKind::MeasureX: return "measure_x";
    case GateKind::MeasureZ: return "measure";
    case GateKind::Correct: return "correct";
  }
  return "?";
}

std::string_view to_string(Granularity g) {
  return g == Granularity::Toffoli ? "toffoli" : "clifford-t";
}

namespace gates {

Gate h(Qubit q) { return make(GateKind::H, {q}); }
Gate s(Qubit q) { return make(GateKind::S, {q}); }
Gate sdg(Qubit q) { return make(GateKind::Sdg, {q}); }
Gate t(Qubit q) { return make(GateKind::T, {q}); }
Gate tdg(Qubit q) { return make(GateKind::Tdg, {q}); }
Gate x(Qubit q) { return make(GateKind::X, {q}); }
Gate z(Qubit q) { return make(GateKind::Z, {q}); }
Gate cz(Qubit a, Qubit b) { return make(GateKind::CZ, {a, b}); }
Gate cnot(Qubit control, Qubit target) {
  return make(GateKind::CNOT, {control, target});
}
Gate toffoli(Qubit a, Qubit b, Qubit target) {
  return make(GateKind::Toffoli, {a, b, target});
}
Gate uncompute(Qubit a, Qubit b, Qubit target) {
  return make(GateKind::Uncompute, {a, b, target});
}
Gate measure_x(Qubit q, Cbit c) {
  Gate g = make(GateKind::MeasureX, {q});
  g.cbit = c;
  return g;
}
Gate measure_z(Qubit q, Cbit c) {
  Gate g = make(GateKind::MeasureZ, {q});
  g.cbit = c;
  return g;
}
Gate correct(Cbit c, GateKind correction, std::initializer_list<Qubit> qubits) {
  Gate g = make(GateKind::Correct, qubits);
  g.cbit = c;
  g.correction = correction;
  return g;
}

}  // namespace gates

bool is_t_gate(const Gate& g) {
  return g.kind == GateKind::T || g.kind == GateKind::Tdg;
}

Qubit Circuit::add_qubit(QubitRole role) {
  roles_.push_back(role);
  return Qubit{static_cast<std::uint32_t>(roles_.size() - 1)};
}

Cbit Circuit::add_cbit() {
  written_.push_back(false);
  return Cbit{static_cast<std::uint32_t>(written_.size() - 1)};
}

void Circuit::append(const Gate& gate) {
  const auto name = std::string(to_string(gate.kind));
  if (!legal_at(gate.kind, granularity_)) {
    throw GranularityError("gate '" + name + "' is not allowed in a " +
                           std::string(to_string(granularity_)) + " circuit");
  }
  if (gate.kind == GateKind::Correct &&
      gate.correction != GateKind::X && gate.correction != GateKind::Z &&
      gate.correction != GateKind::CZ) {
    throw DomainError("classically controlled corrections must be X, Z or CZ");
  }
  if (gate.arity != expected_arity(gate)) {
    throw DomainError("gate '" + name + "' has the wrong number of operands");
  }
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (index(ops[i]) >= roles_.size()) {
      throw DomainError("gate '" + name + "' references unallocated qubit " +
                        std::to_string(index(ops[i])));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) {
        throw DomainError("gate '" + name + "' repeats an operand");
      }
    }
  }
  if (gate.uses_cbit()) {
    const auto c = index(gate.cbit);
    if (c >= written_.size()) {
      throw DomainError("gate '" + name + "' references unallocated bit " +
                        std::to_string(c));
    }
    if (gate.kind == GateKind::Correct) {
      if (!written_[c]) {
        throw DomainError("classical bit " + std::to_string(c) +
                          " is read before any measurement writes it");
      }
    } else {
      written_[c] = true;
    }
  }
  gates_.push_back(gate);
}

void Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
}

std::vector<Qubit> Circuit::qubits_with_role(QubitRole role) const {
  std::vector<Qubit> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) out.push_back(Qubit{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::size_t Circuit::count(QubitRole role) const {
  return static_cast<std::size_t>(
      std::count(roles_.begin(), roles_.end(), role));
}

Circuit Circuit::empty_copy(Granularity granularity) const {
  Circuit out(granularity);
  out.roles_ = roles_;
  out.written_.assign(written_.size(), false);
  return out;
}

Circuit Circuit::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > gates_.size()) {
    throw DomainError("slice bounds out of range");
  }
  Circuit out = empty_copy(granularity_);
  out.append(std::span(gates_).subspan(begin, end - begin));
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.granularity() != b.granularity() ||
      !std::equal(a.roles().begin(), a.roles().end(), b.roles().begin(),
                  b.roles().end()) ||
      a.cbit_count() != b.cbit_count()) {
    throw DomainError("concat requires identical registers and granularity");
  }
  Circuit out = a;
  out.append(b.gates());
  return out;
}

// Scheduling ---------------------------------------------------------------

namespace {

bool counts_toward(const Gate& g, DepthWeight weight) {
  switch (weight) {
    case DepthWeight::All: return true;
    case DepthWeight::T: return is_t_gate(g);
    case DepthWeight::Cnot: return g.kind == GateKind::CNOT;
    case DepthWeight::Toffoli: return g.kind == GateKind::Toffoli;
  }
  return false;
}

/// Runs the ASAP clock over qubits followed by classical bits and calls
/// `visit(gate_index, level)` for every gate.
template <typename Visit>
std::uint64_t run_clock(const Circuit& circuit, DepthWeight weight,
                        Visit&& visit) {
  const std::size_t nq = circuit.qubit_count();
  std::vector<std::uint64_t> clock(nq + circuit.cbit_count(), 0);
  std::uint64_t depth = 0;
  const auto gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    std::uint64_t level = 0;
    for (Qubit q : g.operands()) level = std::max(level, clock[index(q)]);
    if (g.uses_cbit()) level = std::max(level, clock[nq + index(g.cbit)]);
    level += counts_toward(g, weight) ? 1 : 0;
    for (Qubit q : g.operands()) clock[index(q)] = level;
    if (g.uses_cbit()) clock[nq + index(g.cbit)] = level;
    depth = std::max(depth, level);
    visit(i, level);
  }
  return depth;
}

}  // namespace

std::vector<std::vector<std::size_t>> Schedule::layers() const {
  std::vector<std::vector<std::size_t>> out(depth);
  for (std::size_t i = 0; i < layer.size(); ++i) out[layer[i] - 1].push_back(i);
  return out;
}

Schedule schedule(const Circuit& circuit) {
  Schedule s;
  s.layer.resize(circuit.size());
  s.depth = static_cast<std::uint32_t>(
      run_clock(circuit, DepthWeight::All, [&](std::size_t i, std::uint64_t l) {
        s.layer[i] = static_cast<std::uint32_t>(l);
      }));
  return s;
}

std::uint64_t weighted_depth(const Circuit& circuit, DepthWeight weight) {
  return run_clock(circuit, weight, [](std::size_t, std::uint64_t) {});
}

ResourceReport metrics(const Circuit& circuit) {
  if (circuit.granularity() != Granularity::CliffordT) {
    throw GranularityError(
        "T metrics are undefined for a Toffoli-level circuit; lower it first");
  }
  ResourceReport r;
  r.qubit_count = circuit.qubit_count();
  r.input_count = circuit.count(QubitRole::Input);
  r.output_count = circuit.count(QubitRole::Output);
  r.ancilla_count = r.qubit_count - r.input_count - r.output_count;
  for (const Gate& g : circuit.gates()) {
    if (is_t_gate(g)) ++r.t_count;
    if (g.kind == GateKind::CNOT) ++r.cnot_count;
    if (g.kind == GateKind::MeasureX || g.kind == GateKind::MeasureZ) {
      ++r.measure_count;
    }
  }
  r.t_depth = weighted_depth(circuit, DepthWeight::T);
  r.cnot_depth = weighted_depth(circuit, DepthWeight::Cnot);
  r.total_depth = weighted_depth(circuit, DepthWeight::All);
  return r;
}

}  // namespace tdepth
