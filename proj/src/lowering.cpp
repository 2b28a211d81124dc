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

#include "tdepth/lowering.hpp"

#include <algorithm>
#include <string>

#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

bool is_diagonal(GateKind k) {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::CZ:
      return true;
    default:
      return false;
  }
}

struct PooledHelper {
  Qubit qubit;
  std::uint64_t last_level = 0;
};

}  // namespace

Circuit lower_toffolis(const Circuit& circuit, const LoweringOptions& options) {
  if (circuit.granularity() != Granularity::Toffoli) {
    throw GranularityError("lower_toffolis expects a Toffoli-level circuit");
  }
  const ToffoliGadget gadget = build_toffoli_gadget(options.variant);
  const UncomputeGadget eraser = build_uncompute_gadget();
  const bool needs_helper = gadget.costs.helper_count > 0;

  const std::size_t nq = circuit.qubit_count();
  std::vector<bool> touched(nq, false);
  for (const Gate& g : circuit.gates()) {
    for (Qubit q : g.operands()) touched[index(q)] = true;
  }
  std::vector<bool> known_zero(nq);
  std::vector<PooledHelper> pool;
  for (std::size_t i = 0; i < nq; ++i) {
    const auto role = circuit.roles()[i];
    known_zero[i] = role != QubitRole::Input && role != QubitRole::Output;
    if (role == QubitRole::Helper && !touched[i]) {
      pool.push_back({Qubit{static_cast<std::uint32_t>(i)}});
    }
  }

  Circuit out = circuit.empty_copy(Granularity::CliffordT);
  std::vector<std::uint64_t> clock(nq, 0);  // Toffoli layer per wire

  for (const Gate& g : circuit.gates()) {
    std::uint64_t level = 0;
    for (Qubit q : g.operands()) level = std::max(level, clock[index(q)]);
    if (g.kind == GateKind::Toffoli) ++level;
    for (Qubit q : g.operands()) clock[index(q)] = level;

    const Qubit target = g.target();
    switch (g.kind) {
      case GateKind::Toffoli: {
        if (!known_zero[index(target)]) {
          throw DomainError("Toffoli target q[" +
                            std::to_string(index(target)) +
                            "] is not known to be |0>; compute gadgets "
                            "only write fresh targets");
        }
        std::optional<Qubit> helper;
        if (needs_helper) {
          auto it = std::find_if(pool.begin(), pool.end(),
                                 [&](const PooledHelper& h) {
                                   return h.last_level < level;
                                 });
          if (it == pool.end()) {
            if (!options.allocate_helpers) {
              throw AllocationError(
                  "no free helper qubit for a Toffoli on layer " +
                  std::to_string(level));
            }
            pool.push_back({out.add_qubit(QubitRole::Helper)});
            it = std::prev(pool.end());
          }
          it->last_level = level;
          helper = it->qubit;
        }
        out.append(gadget.instantiate(g.qubits[0], g.qubits[1], target, helper));
        known_zero[index(target)] = false;
        break;
      }
      case GateKind::Uncompute: {
        const Cbit bit = out.add_cbit();
        out.append(eraser.instantiate(g.qubits[0], g.qubits[1], target, bit));
        known_zero[index(target)] = true;
        break;
      }
      default:
        out.append(g);
        if (!is_diagonal(g.kind)) known_zero[index(target)] = false;
    }
  }
  return out;
}

}  // namespace tdepth
