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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdepth {

enum class Qubit : std::uint32_t {};
enum class Cbit : std::uint32_t {};

constexpr std::uint32_t index(Qubit q) { return static_cast<std::uint32_t>(q); }
constexpr std::uint32_t index(Cbit c) { return static_cast<std::uint32_t>(c); }

/// Fixed at allocation. Qubits are numbered in allocation order.
enum class QubitRole : std::uint8_t {
  Input,
  Output,
  InputCopy,
  Storage,  // holds one monomial value
  TreeNode,
  Helper,
};

std::string_view to_string(QubitRole role);
QubitRole parse_role(std::string_view name);

enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  T,
  Tdg,
  X,
  Z,
  CZ,
  CNOT,
  Toffoli,
  // Marker for erasing a target known to hold the AND of the two controls.
  // Acts as a Toffoli at Toffoli granularity; lowers to a measurement gadget.
  Uncompute,
  MeasureX,
  MeasureZ,
  // Clifford correction (X, Z or CZ) conditioned on a classical bit.
  Correct,
};

std::string_view to_string(GateKind kind);

/// Operands are stored controls-first, target last.
struct Gate {
  GateKind kind = GateKind::X;
  std::uint8_t arity = 0;
  std::array<Qubit, 3> qubits{};
  Cbit cbit{};                          // written (measure) or read (correct)
  GateKind correction = GateKind::X;    // Correct only

  std::span<const Qubit> operands() const { return {qubits.data(), arity}; }
  Qubit target() const { return qubits[arity - 1]; }
  bool uses_cbit() const {
    return kind == GateKind::MeasureX || kind == GateKind::MeasureZ ||
           kind == GateKind::Correct;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

namespace gates {

Gate h(Qubit q);
Gate s(Qubit q);
Gate sdg(Qubit q);
Gate t(Qubit q);
Gate tdg(Qubit q);
Gate x(Qubit q);
Gate z(Qubit q);
Gate cz(Qubit a, Qubit b);
Gate cnot(Qubit control, Qubit target);
Gate toffoli(Qubit a, Qubit b, Qubit target);
Gate uncompute(Qubit a, Qubit b, Qubit target);
Gate measure_x(Qubit q, Cbit c);
Gate measure_z(Qubit q, Cbit c);
/// `correction` is X, Z (one qubit) or CZ (two qubits).
Gate correct(Cbit c, GateKind correction, std::initializer_list<Qubit> qubits);

}  // namespace gates

bool is_t_gate(const Gate& g);

enum class Granularity : std::uint8_t { Toffoli, CliffordT };

std::string_view to_string(Granularity g);

/// Ordered gate list over an allocated qubit table. Every append is
/// validated: operands exist and are distinct, the gate kind is legal at the
/// circuit's granularity, and a classical bit is written before it is read.
class Circuit {
 public:
  explicit Circuit(Granularity granularity = Granularity::Toffoli)
      : granularity_(granularity) {}

  Qubit add_qubit(QubitRole role);
  Cbit add_cbit();

  void append(const Gate& gate);
  void append(std::span<const Gate> gates);

  Granularity granularity() const { return granularity_; }
  std::size_t qubit_count() const { return roles_.size(); }
  std::size_t cbit_count() const { return written_.size(); }
  QubitRole role(Qubit q) const { return roles_.at(index(q)); }
  std::span<const QubitRole> roles() const { return roles_; }
  std::vector<Qubit> qubits_with_role(QubitRole role) const;
  std::size_t count(QubitRole role) const;
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Same registers, gates [begin, end).
  Circuit slice(std::size_t begin, std::size_t end) const;
  /// Same registers, no gates.
  Circuit empty_copy(Granularity granularity) const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.granularity_ == b.granularity_ && a.roles_ == b.roles_ &&
           a.written_.size() == b.written_.size() && a.gates_ == b.gates_;
  }

 private:
  Granularity granularity_;
  std::vector<QubitRole> roles_;
  std::vector<bool> written_;
  std::vector<Gate> gates_;
};

/// Appends b's gates to a copy of a. Both must share the same registers.
Circuit concat(const Circuit& a, const Circuit& b);

// Scheduling and metrics ---------------------------------------------------

/// ASAP layering over the qubit/classical-bit dependency DAG. Layers are
/// 1-based; a gate sits one past the latest earlier gate it shares a wire
/// with.
struct Schedule {
  std::vector<std::uint32_t> layer;
  std::uint32_t depth = 0;

  std::vector<std::vector<std::size_t>> layers() const;
};

Schedule schedule(const Circuit& circuit);

enum class DepthWeight : std::uint8_t { All, T, Cnot, Toffoli };

/// Longest path through the dependency DAG where only gates selected by
/// `weight` add to path length.
std::uint64_t weighted_depth(const Circuit& circuit, DepthWeight weight);

struct ResourceReport {
  std::uint64_t qubit_count = 0;
  std::uint64_t input_count = 0;
  std::uint64_t output_count = 0;
  std::uint64_t ancilla_count = 0;  // qubit_count - inputs - outputs
  std::uint64_t t_count = 0;
  std::uint64_t t_depth = 0;
  std::uint64_t cnot_count = 0;
  std::uint64_t cnot_depth = 0;
  std::uint64_t total_depth = 0;
  std::uint64_t measure_count = 0;

  friend bool operator==(const ResourceReport&,
                         const ResourceReport&) = default;
};

/// Throws GranularityError for Toffoli-level circuits.
ResourceReport metrics(const Circuit& circuit);

// Text dialect ------------------------------------------------------------

/// OpenQASM-2-compatible text, one gate per line, with role comments.
std::string export_text(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace tdepth
