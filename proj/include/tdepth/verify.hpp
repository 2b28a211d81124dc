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

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "tdepth/anf.hpp"
#include "tdepth/circuit.hpp"

namespace tdepth {

// Reversible (classical) simulation -----------------------------------------

struct BitState {
  std::vector<std::uint8_t> qubits;
  std::vector<std::uint8_t> cbits;

  friend bool operator==(const BitState&, const BitState&) = default;
};

/// Propagates basis values through X, CNOT, Toffoli and uncompute markers
/// (run as Toffolis). Any other gate raises GranularityError.
BitState simulate_reversible(const Circuit& circuit, BitState input);

struct Failure {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::string message;
};

struct VerificationReport {
  std::uint64_t checked = 0;
  std::vector<Failure> failures;  // sorted by x, capped
  double max_amplitude_error = 0.0;

  bool passed() const { return failures.empty(); }
};

std::string to_json(const VerificationReport& report);

/// Worker count from ANF_TDEPTH_THREADS, else the hardware concurrency.
unsigned verification_threads();

/// For every x with y = 0: outputs equal f(x), inputs are preserved and
/// every other qubit ends in 0. Also checks y ^ f(x) on 16 random (x, y)
/// pairs with y != 0. Requires a Toffoli-level circuit and n <= 20.
VerificationReport exhaustive_check(const Circuit& circuit,
                                    const MultiOutputFunction& f,
                                    unsigned threads = 0);

// Statevector simulation with measurement branches ---------------------------

inline constexpr int kMaxBranchQubits = 14;

using Amplitudes = Eigen::VectorXcd;

struct Branch {
  std::vector<std::int8_t> outcomes;  // -1 until the bit is measured
  Amplitudes state;
  double probability = 1.0;
};

struct BranchedState {
  std::vector<Branch> branches;  // outcome 0 explored before 1

  double total_probability() const;
};

/// Evolves |basis_input> and splits on every measurement; corrections are
/// applied per branch. Branches below 1e-12 probability are dropped.
BranchedState simulate_branches(const Circuit& circuit,
                                std::uint64_t basis_input);

/// Same, from an arbitrary initial vector whose dimension may exceed
/// 2^qubit_count (extra high qubits are left untouched).
BranchedState simulate_branches(const Circuit& circuit,
                                const Amplitudes& initial);

/// Functional check of a Clifford+T circuit by statevector simulation: for
/// every x (y = 0) each measurement branch must end, up to phase, in the
/// basis state with inputs x, outputs f(x) and all other qubits 0.
/// Limited to 20 qubits.
VerificationReport statevector_check(const Circuit& circuit,
                                     const MultiOutputFunction& f);

/// Expected action of a gadget on its data qubits (all non-helper qubits,
/// in index order): column j is the output state for basis input
/// domain[j].
struct GadgetReference {
  std::vector<std::uint64_t> domain;
  Eigen::MatrixXcd images;
};

/// The 8x8 Toffoli unitary on (a, b, t) with t as bit 2.
Eigen::MatrixXcd toffoli_unitary();
/// Toffoli restricted to t = 0, the domain of the compute gadgets.
GadgetReference and_compute_reference();
/// |a, b, ab> -> |a, b, 0>.
GadgetReference and_erase_reference();
/// Toffoli on (a, b, t) with a storage qubit (bit 3) held at |0>.
GadgetReference full_toffoli_reference();
GadgetReference unitary_reference(const Eigen::MatrixXcd& u);

/// Checks every domain input on every measurement branch, up to a global
/// phase per branch, with helpers starting and ending in |0>. A second pass
/// runs the domain in superposition against a reference register, which
/// also pins the relative phases between inputs. Tolerance 1e-10.
VerificationReport gadget_equivalence(const Circuit& gadget,
                                      const GadgetReference& reference);

}  // namespace tdepth
