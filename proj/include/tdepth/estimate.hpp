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

#include <string>
#include <string_view>

#include "tdepth/anf.hpp"
#include "tdepth/decomp.hpp"

namespace tdepth {

/// Resource counts grow like n * 2^n; 128 bits keep n up to 64 exact.
__extension__ typedef __int128 Wide;

std::string to_string(Wide value);

enum class BoundsSource : std::uint8_t { ClosedForm, Summation, FunctionSpecific };

std::string_view to_string(BoundsSource s);

/// Ancilla includes the m output qubits.
struct ResourceBounds {
  int n = 0;
  int m = 0;
  ToffoliVariant variant = ToffoliVariant::TDepthOne;
  BoundsSource source = BoundsSource::ClosedForm;
  Wide ancilla = 0;
  Wide t_count = 0;
  Wide t_depth = 0;
  Wide cnot_count = 0;
  Wide cnot_depth = 0;
};

/// Closed forms for a complete n-input, m-output function:
///   ancilla     2^(n-1)(3n-2) - 3n + m + 1
///   T count     2^(n+1)(n-2) + 4
///   CNOT count  2^(n-1)(11n+2m-18) - 4n - m + 9
///   CNOT depth  2^n + 2n + 9 ceil(log2 n) - 3
///   T depth     ceil(log2 n)
/// The logical-AND variant saves 2^(n-1)(n-2)+1 ancilla and three times
/// that in CNOTs, at one extra T layer. Requires 2 <= n <= 64, m >= 1.
ResourceBounds theorem1_bounds(int n, int m,
                               ToffoliVariant v = ToffoliVariant::TDepthOne);

/// The same quantities as raw sums over k = 2..n of binomial terms.
ResourceBounds summation_bounds(int n, int m,
                                ToffoliVariant v = ToffoliVariant::TDepthOne);

/// Accounting over the monomials actually present in f.
ResourceBounds function_specific_estimate(
    const MultiOutputFunction& f, ToffoliVariant v = ToffoliVariant::TDepthOne);

}  // namespace tdepth
