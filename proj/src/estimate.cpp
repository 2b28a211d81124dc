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

#include "tdepth/estimate.hpp"

#include <algorithm>

#include "tdepth/errors.hpp"
#include "tdepth/synth.hpp"

namespace tdepth {
namespace {

Wide pow2(int e) { return Wide{1} << e; }

Wide binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Wide r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_domain(int n, int m) {
  if (n < 2 || n > kMaxArity) {
    throw DomainError("bounds need 2 <= n <= 64 (no nonlinear terms below 2)");
  }
  if (m < 1) throw DomainError("bounds need m >= 1");
}

Wide ceil_log2(Wide x) { return tree_levels(static_cast<std::uint64_t>(x)); }

}  // namespace

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  for (Wide v = negative ? -value : value; v > 0; v /= 10) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

std::string_view to_string(BoundsSource s) {
  switch (s) {
    case BoundsSource::ClosedForm: return "closed-form";
    case BoundsSource::Summation: return "summation";
    case BoundsSource::FunctionSpecific: return "function-specific";
  }
  return "?";
}

ResourceBounds theorem1_bounds(int n, int m, ToffoliVariant v) {
  check_domain(n, m);
  ResourceBounds b{n, m, v, BoundsSource::ClosedForm};
  const Wide half = pow2(n - 1);
  b.ancilla = half * (3 * n - 2) - 3 * n + m + 1;
  b.t_count = pow2(n + 1) * (n - 2) + 4;
  b.cnot_count = half * (11 * n + 2 * m - 18) - 4 * n - m + 9;
  b.cnot_depth = pow2(n) + 2 * n + 9 * ceil_log2(n) - 3;
  b.t_depth = ceil_log2(n);
  if (v == ToffoliVariant::LogicalAnd) {
    const Wide saved = half * (n - 2) + 1;
    b.ancilla -= saved;
    b.cnot_count -= 3 * saved;
    b.t_depth += 1;
  }
  return b;
}

ResourceBounds summation_bounds(int n, int m, ToffoliVariant v) {
  check_domain(n, m);
  ResourceBounds b{n, m, v, BoundsSource::Summation};
  const Wide per_toffoli_ancilla = v == ToffoliVariant::TDepthOne ? 2 : 1;
  const Wide per_toffoli_cnot = accounting_cnots_per_toffoli(v);
  Wide holders = 0, storage = 0, decomposition = 0, t = 0, gadget_cnots = 0;
  for (int k = 2; k <= n; ++k) {
    const Wide c = binomial(n, k);
    holders += k * c;
    storage += c;
    decomposition += per_toffoli_ancilla * (k - 1) * c;
    t += 4 * (k - 1) * c;
    gadget_cnots += per_toffoli_cnot * (k - 1) * c;
  }
  const Wide copies = holders - n;
  b.ancilla = copies + storage + m + decomposition;
  b.t_count = t;
  b.cnot_count = 2 * copies + m * (storage + n) + gadget_cnots;
  // Fan-out depth n-1 each way, 2^n-1 output terms, 9 CNOT layers per
  // Toffoli layer.
  b.cnot_depth = 2 * (n - 1) + (pow2(n) - 1) + 9 * ceil_log2(n);
  b.t_depth = ceil_log2(n) + (v == ToffoliVariant::LogicalAnd ? 1 : 0);
  return b;
}

ResourceBounds function_specific_estimate(const MultiOutputFunction& f,
                                          ToffoliVariant v) {
  const SynthesisPlan p = plan(f, v);
  ResourceBounds b{f.arity(), f.outputs(), v, BoundsSource::FunctionSpecific};
  Wide decomposition = 0, t = 0, gadget_cnots = 0;
  for (Monomial mono : p.monomials) {
    const auto cost = cost_model(static_cast<std::uint64_t>(mono.degree()), v);
    decomposition += cost.ancilla;
    t += cost.t_count;
    gadget_cnots += cost.cnot_count;
  }
  const Wide copies = p.copy_total();
  Wide terms = 0;
  for (const auto& coord : f.coordinates()) terms += coord.term_count();

  b.ancilla = copies + Wide(p.storage_total()) + f.outputs() + decomposition;
  b.t_count = t;
  b.cnot_count = 2 * copies + terms + gadget_cnots;
  b.cnot_depth = stage_depth_report(p, f).predicted_total;
  const int levels = tree_levels(static_cast<std::uint64_t>(p.max_degree()));
  b.t_depth = levels + (v == ToffoliVariant::LogicalAnd && levels > 0 ? 1 : 0);
  return b;
}

}  // namespace tdepth
