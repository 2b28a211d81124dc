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
#include <vector>

#include "tdepth/anf.hpp"
#include "tdepth/circuit.hpp"
#include "tdepth/decomp.hpp"

namespace tdepth {

/// Qubit allocation and stage layout computed before any gate is emitted.
///
/// Qubits are numbered inputs, copies, storage, tree nodes, helpers,
/// outputs. Each variable's holders are the original input followed by its
/// copies; every monomial takes a distinct holder of each of its variables.
struct SynthesisPlan {
  int n = 0;
  int m = 0;
  ToffoliVariant variant = ToffoliVariant::TDepthOne;

  std::vector<Monomial> monomials;           // deduplicated, degree >= 2
  std::vector<std::uint64_t> occurrences;    // per variable, across monomials
  std::vector<std::uint64_t> copy_counts;    // max(occurrences - 1, 0)

  std::vector<Qubit> inputs;
  std::vector<std::vector<Qubit>> holders;   // per variable
  std::vector<Qubit> storage;                // per monomial
  std::vector<std::vector<Qubit>> controls;  // per monomial, one per variable
  std::uint64_t tree_node_count = 0;
  std::uint64_t helper_count = 0;
  std::vector<Qubit> outputs;

  std::uint64_t copy_total() const;
  std::uint64_t storage_total() const { return monomials.size(); }
  std::uint64_t qubit_count() const;
  /// Largest monomial degree (0 when there are no nonlinear terms).
  int max_degree() const;
};

SynthesisPlan plan(const MultiOutputFunction& f,
                   ToffoliVariant variant = ToffoliVariant::TDepthOne);

/// Gate-index ranges of the four stages in the Toffoli-level circuit.
struct StageBounds {
  std::size_t fan_out_end = 0;
  std::size_t trees_end = 0;
  std::size_t output_end = 0;
  std::size_t end = 0;
};

/// Predicted CNOT depth per stage using the accounting constants, plus the
/// measured values when a circuit is available.
struct StageDepths {
  std::uint64_t fan_out = 0;      // ceil(log2(max holders of a variable))
  std::uint64_t fan_in = 0;       // inverse fan-out, same as fan_out
  std::uint64_t output_xor = 0;   // max terms in one coordinate
  std::uint64_t gadget = 0;       // per-Toffoli constant * Toffoli layers
  std::uint64_t predicted_total = 0;

  std::uint64_t measured_fan_out = 0;
  std::uint64_t measured_output_xor = 0;
  std::uint64_t measured_total = 0;
};

StageDepths stage_depth_report(const SynthesisPlan& plan,
                               const MultiOutputFunction& f);

struct SynthesisResult {
  SynthesisPlan plan;
  Circuit toffoli_circuit;
  StageBounds stages;
  Circuit circuit;  // Clifford+T
  ResourceReport report;
  StageDepths stage_depths;
};

/// Toffoli-level stages only: fan-out, parallel monomial trees, output XOR,
/// uncompute.
Circuit synthesize_toffoli(const MultiOutputFunction& f,
                           const SynthesisPlan& plan,
                           StageBounds* stages = nullptr);

/// Full pipeline: plan, Toffoli-level circuit, lowering, metrics.
SynthesisResult synthesize(const MultiOutputFunction& f,
                           ToffoliVariant variant = ToffoliVariant::TDepthOne);

}  // namespace tdepth
