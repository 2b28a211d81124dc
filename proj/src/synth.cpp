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

#include "tdepth/synth.hpp"

#include <algorithm>

#include "tdepth/errors.hpp"
#include "tdepth/lowering.hpp"

namespace tdepth {

std::uint64_t SynthesisPlan::copy_total() const {
  std::uint64_t total = 0;
  for (auto c : copy_counts) total += c;
  return total;
}

std::uint64_t SynthesisPlan::qubit_count() const {
  return static_cast<std::uint64_t>(n) + copy_total() + storage_total() +
         tree_node_count + helper_count + static_cast<std::uint64_t>(m);
}

int SynthesisPlan::max_degree() const {
  return monomials.empty() ? 0 : monomials.back().degree();
}

SynthesisPlan plan(const MultiOutputFunction& f, ToffoliVariant variant) {
  SynthesisPlan p;
  p.n = f.arity();
  p.m = f.outputs();
  p.variant = variant;
  p.monomials = nonlinear_monomials(f);

  p.occurrences.assign(p.n, 0);
  for (Monomial mono : p.monomials) {
    for (int v : mono.vars()) ++p.occurrences[v];
  }
  for (auto occ : p.occurrences) p.copy_counts.push_back(occ > 0 ? occ - 1 : 0);

  std::uint32_t next = 0;
  auto take = [&] { return Qubit{next++}; };
  for (int i = 0; i < p.n; ++i) p.inputs.push_back(take());
  p.holders.resize(p.n);
  for (int i = 0; i < p.n; ++i) {
    p.holders[i].push_back(p.inputs[i]);
    for (std::uint64_t c = 0; c < p.copy_counts[i]; ++c) {
      p.holders[i].push_back(take());
    }
  }
  for (std::size_t k = 0; k < p.monomials.size(); ++k) {
    p.storage.push_back(take());
  }

  std::vector<std::size_t> cursor(p.n, 0);
  std::vector<std::uint64_t> per_level;
  for (Monomial mono : p.monomials) {
    std::vector<Qubit> ctrl;
    for (int v : mono.vars()) ctrl.push_back(p.holders[v][cursor[v]++]);
    p.controls.push_back(std::move(ctrl));

    const auto k = static_cast<std::uint64_t>(mono.degree());
    p.tree_node_count += k - 2;
    const auto levels = toffolis_per_level(k);
    if (per_level.size() < levels.size()) per_level.resize(levels.size(), 0);
    for (std::size_t l = 0; l < levels.size(); ++l) per_level[l] += levels[l];
  }
  next += static_cast<std::uint32_t>(p.tree_node_count);
  if (variant == ToffoliVariant::TDepthOne && !per_level.empty()) {
    p.helper_count = *std::max_element(per_level.begin(), per_level.end());
  }
  next += static_cast<std::uint32_t>(p.helper_count);
  for (int j = 0; j < p.m; ++j) p.outputs.push_back(take());
  return p;
}

Circuit synthesize_toffoli(const MultiOutputFunction& f,
                           const SynthesisPlan& p, StageBounds* stages) {
  Circuit c(Granularity::Toffoli);
  for (int i = 0; i < p.n; ++i) c.add_qubit(QubitRole::Input);
  for (int i = 0; i < p.n; ++i) {
    for (std::uint64_t k = 0; k < p.copy_counts[i]; ++k) {
      c.add_qubit(QubitRole::InputCopy);
    }
  }
  for (std::size_t k = 0; k < p.monomials.size(); ++k) {
    c.add_qubit(QubitRole::Storage);
  }
  std::vector<MctTree> trees;
  std::size_t max_levels = 0;
  for (std::size_t k = 0; k < p.monomials.size(); ++k) {
    trees.push_back(build_mct_tree(c, p.controls[k], p.storage[k]));
    max_levels = std::max(max_levels, trees.back().level_count());
  }
  for (std::uint64_t h = 0; h < p.helper_count; ++h) {
    c.add_qubit(QubitRole::Helper);
  }
  for (int j = 0; j < p.m; ++j) c.add_qubit(QubitRole::Output);
  if (c.qubit_count() != p.qubit_count() ||
      (p.m > 0 && c.qubits_with_role(QubitRole::Output).front() !=
                      p.outputs.front())) {
    throw AllocationError("qubit allocation diverged from the plan");
  }

  StageBounds bounds;

  // Stage 1: doubling cascade per variable; every holder copies once per
  // round, so a variable with h holders takes ceil(log2 h) rounds.
  std::vector<Gate> fan_out;
  std::vector<std::size_t> have(p.n, 1);
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < p.n; ++i) {
      const auto& hs = p.holders[i];
      const std::size_t cur = have[i];
      for (std::size_t j = 0; j < cur && cur + j < hs.size(); ++j) {
        fan_out.push_back(gates::cnot(hs[j], hs[cur + j]));
        progress = true;
      }
      have[i] = std::min(2 * cur, hs.size());
    }
  }
  c.append(fan_out);
  bounds.fan_out_end = c.size();

  // Stage 2: all trees advance one level at a time.
  for (std::size_t l = 0; l < max_levels; ++l) {
    for (const auto& tree : trees) {
      if (l < tree.level_count()) c.append(tree.compute_levels[l]);
    }
  }
  bounds.trees_end = c.size();

  // Stage 3: stored monomials and original inputs onto each output.
  for (int j = 0; j < p.m; ++j) {
    const auto& coord = f.coordinate(j);
    const Qubit out = p.outputs[j];
    for (Monomial mono : coord.monomials()) {
      if (mono.degree() == 1) {
        c.append(gates::cnot(p.inputs[mono.vars().front()], out));
        continue;
      }
      const auto it =
          std::lower_bound(p.monomials.begin(), p.monomials.end(), mono);
      c.append(gates::cnot(p.storage[it - p.monomials.begin()], out));
    }
    if (coord.constant_term()) c.append(gates::x(out));
  }
  bounds.output_end = c.size();

  // Stage 4: erase storage, then tree nodes top-down, then the copies.
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const Gate& root = trees[k].root();
    c.append(gates::uncompute(root.qubits[0], root.qubits[1], p.storage[k]));
  }
  for (const auto& tree : trees) c.append(tree.uncompute);
  for (auto it = fan_out.rbegin(); it != fan_out.rend(); ++it) c.append(*it);
  bounds.end = c.size();

  if (stages) *stages = bounds;
  return c;
}

StageDepths stage_depth_report(const SynthesisPlan& p,
                               const MultiOutputFunction& f) {
  StageDepths d;
  std::uint64_t max_holders = 0;
  for (auto occ : p.occurrences) max_holders = std::max(max_holders, occ);
  d.fan_out = max_holders > 1 ? tree_levels(max_holders) : 0;
  d.fan_in = d.fan_out;
  for (const auto& coord : f.coordinates()) {
    d.output_xor = std::max<std::uint64_t>(d.output_xor, coord.term_count());
  }
  d.gadget = accounting_cnots_per_toffoli(p.variant) *
             static_cast<std::uint64_t>(tree_levels(p.max_degree()));
  d.predicted_total = d.fan_out + d.fan_in + d.output_xor + d.gadget;
  return d;
}

SynthesisResult synthesize(const MultiOutputFunction& f,
                           ToffoliVariant variant) {
  SynthesisPlan p = plan(f, variant);
  StageBounds bounds;
  Circuit toffoli = synthesize_toffoli(f, p, &bounds);
  Circuit lowered = lower_toffolis(toffoli, {variant, false});
  ResourceReport report = metrics(lowered);
  StageDepths depths = stage_depth_report(p, f);
  depths.measured_fan_out = weighted_depth(
      toffoli.slice(0, bounds.fan_out_end), DepthWeight::Cnot);
  depths.measured_output_xor = weighted_depth(
      toffoli.slice(bounds.trees_end, bounds.output_end), DepthWeight::Cnot);
  depths.measured_total = report.cnot_depth;
  return {std::move(p),      std::move(toffoli), bounds,
          std::move(lowered), report,             depths};
}

}  // namespace tdepth
