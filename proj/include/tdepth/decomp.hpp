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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tdepth/circuit.hpp"

namespace tdepth {

/// Which four-T Toffoli construction backs each compute Toffoli.
enum class ToffoliVariant : std::uint8_t {
  TDepthOne,   // T depth 1, one reusable helper qubit
  LogicalAnd,  // T depth 2, no helper
};

std::string_view to_string(ToffoliVariant v);
ToffoliVariant parse_variant(std::string_view name);

/// Costs measured from a gadget template.
struct GadgetCosts {
  std::uint64_t t_count = 0;
  std::uint64_t t_depth = 0;
  std::uint64_t cnot_count = 0;
  std::uint64_t cnot_depth = 0;
  std::uint64_t helper_count = 0;
};

/// A compute-AND gadget: |a, b, 0> -> |a, b, a AND b>, with any helper
/// starting and ending in |0>. Template qubits are a=0, b=1, target=2 and
/// helper=3 when present.
struct ToffoliGadget {
  ToffoliVariant variant;
  Circuit circuit;
  GadgetCosts costs;

  std::vector<Gate> instantiate(Qubit a, Qubit b, Qubit target,
                                std::optional<Qubit> helper) const;
};

ToffoliGadget build_toffoli_gadget(ToffoliVariant variant);

/// Measurement-based erasure of a target known to hold a AND b: X-basis
/// measurement, CZ on the controls when the outcome is 1, then reset.
/// Template qubits a=0, b=1, target=2; classical bit 0.
struct UncomputeGadget {
  Circuit circuit;

  std::vector<Gate> instantiate(Qubit a, Qubit b, Qubit target,
                                Cbit outcome) const;
};

UncomputeGadget build_uncompute_gadget();

/// A full Toffoli on (a, b, t) for arbitrary t: compute a AND b into a
/// fresh storage qubit, CNOT it onto t, then erase it by measurement.
/// Qubits a=0, b=1, t=2, storage=3, helper=4 (tdepth1 only).
Circuit full_toffoli_circuit(ToffoliVariant variant);

/// Balanced binary AND-tree for a k-controlled Toffoli.
///
/// Leaves are paired left to right on each level; an odd leaf is promoted
/// unchanged. The root Toffoli writes the caller's target directly, so a
/// tree has k-1 Toffolis over k-2 tree-node qubits in ceil(log2 k) levels.
struct MctTree {
  std::vector<Qubit> controls;
  std::vector<Qubit> nodes;
  Qubit target;
  /// Toffolis per level, leaves first; the last level holds the root.
  /// For k = 1 this holds a single CNOT.
  std::vector<std::vector<Gate>> compute_levels;
  /// Uncompute markers for `nodes`, top level first.
  std::vector<Gate> uncompute;

  std::size_t toffoli_count() const;
  std::size_t level_count() const { return compute_levels.size(); }
  const Gate& root() const { return compute_levels.back().back(); }
};

/// Allocates the tree-node qubits in `circuit` (role TreeNode) and returns
/// the tree without emitting it. k = controls.size() must be >= 1.
MctTree build_mct_tree(Circuit& circuit, std::span<const Qubit> controls,
                       Qubit target);

/// Appends compute levels followed by the uncompute markers.
void emit(Circuit& circuit, const MctTree& tree);

/// Stand-alone Toffoli-level circuit for a k-controlled Toffoli: k inputs,
/// then the target, then tree nodes.
Circuit mct_circuit(int k, QubitRole target_role = QubitRole::Storage);

/// Tree levels for k leaves: ceil(log2 k), and 0 for k = 1.
int tree_levels(std::uint64_t k);
/// Toffolis on each level of a k-leaf tree, leaves first.
std::vector<std::uint64_t> toffolis_per_level(std::uint64_t k);

/// Resource accounting constants for one k-MCT. These are the published
/// per-Toffoli figures, independent of the measured templates.
struct MctCost {
  std::uint64_t ancilla = 0;
  std::uint64_t t_count = 0;
  std::uint64_t t_depth = 0;
  std::uint64_t cnot_count = 0;
};

/// CNOT cost per Toffoli used in accounting: 9 (T-depth-1) or 6 (logical-AND).
std::uint64_t accounting_cnots_per_toffoli(ToffoliVariant v);
MctCost cost_model(std::uint64_t k, ToffoliVariant v);

}  // namespace tdepth
