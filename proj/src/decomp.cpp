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

#include "tdepth/decomp.hpp"

#include <algorithm>
#include <string>

#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

std::vector<Gate> remap(const Circuit& tmpl, std::span<const Qubit> qubits,
                        Cbit outcome) {
  std::vector<Gate> out;
  out.reserve(tmpl.size());
  for (Gate g : tmpl.gates()) {
    for (std::size_t i = 0; i < g.arity; ++i) {
      g.qubits[i] = qubits[index(g.qubits[i])];
    }
    if (g.uses_cbit()) g.cbit = outcome;
    out.push_back(g);
  }
  return out;
}

GadgetCosts measure_costs(const Circuit& c) {
  const auto r = metrics(c);
  return {r.t_count, r.t_depth, r.cnot_count, r.cnot_depth,
          c.count(QubitRole::Helper)};
}

}  // namespace

std::string_view to_string(ToffoliVariant v) {
  return v == ToffoliVariant::TDepthOne ? "tdepth1" : "logical-and";
}

ToffoliVariant parse_variant(std::string_view name) {
  if (name == "tdepth1") return ToffoliVariant::TDepthOne;
  if (name == "logical-and") return ToffoliVariant::LogicalAnd;
  throw DomainError("unknown Toffoli variant '" + std::string(name) +
                    "' (expected tdepth1 or logical-and)");
}

std::vector<Gate> ToffoliGadget::instantiate(
    Qubit a, Qubit b, Qubit target, std::optional<Qubit> helper) const {
  if (costs.helper_count > 0 && !helper) {
    throw AllocationError("the T-depth-1 gadget needs a helper qubit");
  }
  const Qubit qubits[] = {a, b, target, helper.value_or(Qubit{0})};
  return remap(circuit, qubits, Cbit{0});
}

ToffoliGadget build_toffoli_gadget(ToffoliVariant variant) {
  using namespace gates;
  Circuit c(Granularity::CliffordT);
  const Qubit a = c.add_qubit(QubitRole::Input);
  const Qubit b = c.add_qubit(QubitRole::Input);
  const Qubit t = c.add_qubit(QubitRole::Storage);

  if (variant == ToffoliVariant::TDepthOne) {
    // The four parities t, a^t, b^t, a^b^t sit on four wires at once, so
    // all four T/Tdg gates share one layer.
    const Qubit h = c.add_qubit(QubitRole::Helper);
    const Gate compute[] = {cnot(a, h), cnot(t, b), cnot(t, a), cnot(b, h)};
    c.append(gates::h(t));
    c.append(compute);
    c.append(gates::t(t));
    c.append(tdg(a));
    c.append(tdg(b));
    c.append(gates::t(h));
    for (auto it = std::rbegin(compute); it != std::rend(compute); ++it) {
      c.append(*it);
    }
    c.append(gates::h(t));
    c.append(s(t));
  } else {
    c.append(gates::h(t));
    c.append(gates::t(t));
    c.append(cnot(a, t));
    c.append(cnot(b, t));
    c.append(cnot(t, a));
    c.append(cnot(t, b));
    c.append(tdg(a));
    c.append(tdg(b));
    c.append(gates::t(t));
    c.append(cnot(t, a));
    c.append(cnot(t, b));
    c.append(gates::h(t));
    c.append(s(t));
  }
  // Phase bookkeeping: the T layer applies w^(4abt - 2ab) in the Hadamard
  // frame of the target; the trailing S cancels the residual (-i)^(ab).
  ToffoliGadget gadget{variant, std::move(c), {}};
  gadget.costs = measure_costs(gadget.circuit);
  return gadget;
}

std::vector<Gate> UncomputeGadget::instantiate(Qubit a, Qubit b, Qubit target,
                                               Cbit outcome) const {
  const Qubit qubits[] = {a, b, target};
  return remap(circuit, qubits, outcome);
}

UncomputeGadget build_uncompute_gadget() {
  Circuit c(Granularity::CliffordT);
  const Qubit a = c.add_qubit(QubitRole::Input);
  const Qubit b = c.add_qubit(QubitRole::Input);
  const Qubit t = c.add_qubit(QubitRole::Storage);
  const Cbit m = c.add_cbit();
  c.append(gates::measure_x(t, m));
  c.append(gates::correct(m, GateKind::CZ, {a, b}));
  c.append(gates::correct(m, GateKind::X, {t}));
  return {std::move(c)};
}

int tree_levels(std::uint64_t k) {
  int levels = 0;
  for (std::uint64_t size = k; size > 1; size = (size + 1) / 2) ++levels;
  return levels;
}

std::vector<std::uint64_t> toffolis_per_level(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t size = k; size > 1; size = (size + 1) / 2) {
    out.push_back(size / 2);
  }
  return out;
}

std::size_t MctTree::toffoli_count() const {
  std::size_t n = 0;
  for (const auto& level : compute_levels) {
    n += static_cast<std::size_t>(
        std::count_if(level.begin(), level.end(), [](const Gate& g) {
          return g.kind == GateKind::Toffoli;
        }));
  }
  return n;
}

MctTree build_mct_tree(Circuit& circuit, std::span<const Qubit> controls,
                       Qubit target) {
  if (controls.empty()) {
    throw DomainError("an MCT tree needs at least one control");
  }
  MctTree tree;
  tree.controls.assign(controls.begin(), controls.end());
  tree.target = target;
  if (controls.size() == 1) {
    tree.compute_levels.push_back({gates::cnot(controls[0], target)});
    return tree;
  }

  std::vector<Qubit> current = tree.controls;
  while (current.size() > 1) {
    const bool root_level = current.size() == 2;
    std::vector<Qubit> next;
    std::vector<Gate> level;
    for (std::size_t i = 0; i + 1 < current.size(); i += 2) {
      Qubit out = target;
      if (!root_level) {
        out = circuit.add_qubit(QubitRole::TreeNode);
        tree.nodes.push_back(out);
      }
      level.push_back(gates::toffoli(current[i], current[i + 1], out));
      next.push_back(out);
    }
    if (current.size() % 2 == 1) next.push_back(current.back());
    tree.compute_levels.push_back(std::move(level));
    current = std::move(next);
  }

  // Erase top-down so each node's children are still live when it goes.
  for (std::size_t l = tree.compute_levels.size() - 1; l-- > 0;) {
    for (const Gate& g : tree.compute_levels[l]) {
      tree.uncompute.push_back(
          gates::uncompute(g.qubits[0], g.qubits[1], g.qubits[2]));
    }
  }
  return tree;
}

void emit(Circuit& circuit, const MctTree& tree) {
  for (const auto& level : tree.compute_levels) circuit.append(level);
  circuit.append(tree.uncompute);
}

Circuit full_toffoli_circuit(ToffoliVariant variant) {
  const ToffoliGadget gadget = build_toffoli_gadget(variant);
  Circuit c(Granularity::CliffordT);
  const Qubit a = c.add_qubit(QubitRole::Input);
  const Qubit b = c.add_qubit(QubitRole::Input);
  const Qubit t = c.add_qubit(QubitRole::Output);
  const Qubit s = c.add_qubit(QubitRole::Storage);
  std::optional<Qubit> helper;
  if (gadget.costs.helper_count > 0) helper = c.add_qubit(QubitRole::Helper);
  const Cbit outcome = c.add_cbit();
  c.append(gadget.instantiate(a, b, s, helper));
  c.append(gates::cnot(s, t));
  c.append(build_uncompute_gadget().instantiate(a, b, s, outcome));
  return c;
}

Circuit mct_circuit(int k, QubitRole target_role) {
  if (k < 1) throw DomainError("k must be >= 1");
  Circuit c(Granularity::Toffoli);
  std::vector<Qubit> controls;
  for (int i = 0; i < k; ++i) controls.push_back(c.add_qubit(QubitRole::Input));
  const Qubit target = c.add_qubit(target_role);
  emit(c, build_mct_tree(c, controls, target));
  return c;
}

std::uint64_t accounting_cnots_per_toffoli(ToffoliVariant v) {
  return v == ToffoliVariant::TDepthOne ? 9 : 6;
}

MctCost cost_model(std::uint64_t k, ToffoliVariant v) {
  if (k < 2) throw DomainError("cost_model needs k >= 2");
  const std::uint64_t toffolis = k - 1;
  MctCost cost;
  cost.ancilla = v == ToffoliVariant::TDepthOne ? 2 * toffolis : toffolis;
  cost.t_count = 4 * toffolis;
  cost.t_depth = static_cast<std::uint64_t>(tree_levels(k)) +
                 (v == ToffoliVariant::LogicalAnd ? 1 : 0);
  cost.cnot_count = accounting_cnots_per_toffoli(v) * toffolis;
  return cost;
}

}  // namespace tdepth
