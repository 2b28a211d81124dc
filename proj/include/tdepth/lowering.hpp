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

#include "tdepth/circuit.hpp"
#include "tdepth/decomp.hpp"

namespace tdepth {

struct LoweringOptions {
  ToffoliVariant variant = ToffoliVariant::TDepthOne;
  /// Append new helper qubits when the reserved pool runs dry instead of
  /// throwing AllocationError.
  bool allocate_helpers = false;
};

/// Replaces every Toffoli by a compute gadget and every uncompute marker by
/// the measurement gadget. Each Toffoli target must be a qubit known to be
/// |0> (an untouched ancilla or one erased by an earlier uncompute).
///
/// Helpers come from Helper-role qubits that the input circuit never
/// touches. A helper is reused only by a Toffoli on a strictly later
/// Toffoli layer, so the T depth equals the Toffoli depth (T-depth-1
/// variant).
Circuit lower_toffolis(const Circuit& circuit, const LoweringOptions& options);

}  // namespace tdepth
