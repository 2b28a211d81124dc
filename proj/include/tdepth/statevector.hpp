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

// Dense statevector kernels. Qubit q is bit q of the basis index.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <utility>

namespace tdepth::sv {

template <typename Derived>
void apply_x(Eigen::MatrixBase<Derived>& psi, unsigned q) {
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (!(i & bit)) std::swap(psi.coeffRef(i), psi.coeffRef(i | bit));
  }
}

template <typename Derived>
void apply_h(Eigen::MatrixBase<Derived>& psi, unsigned q) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Real r = Real(1) / std::sqrt(Real(2));
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Scalar a = psi.coeff(i), b = psi.coeff(i | bit);
    psi.coeffRef(i) = r * (a + b);
    psi.coeffRef(i | bit) = r * (a - b);
  }
}

/// Multiplies every amplitude whose `mask` bits are all set by `phase`.
template <typename Derived>
void apply_phase(Eigen::MatrixBase<Derived>& psi, Eigen::Index mask,
                 const typename Derived::Scalar& phase) {
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi.coeffRef(i) *= phase;
  }
}

/// Flips `target` wherever all `controls` bits are set.
template <typename Derived>
void apply_controlled_x(Eigen::MatrixBase<Derived>& psi, Eigen::Index controls,
                        unsigned target) {
  const Eigen::Index bit = Eigen::Index{1} << target;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (!(i & bit) && (i & controls) == controls) {
      std::swap(psi.coeffRef(i), psi.coeffRef(i | bit));
    }
  }
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real probability_one(
    const Eigen::MatrixBase<Derived>& psi, unsigned q) {
  typename Eigen::NumTraits<typename Derived::Scalar>::Real p(0);
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) p += std::norm(psi.coeff(i));
  }
  return p;
}

/// Zeroes the amplitudes inconsistent with measuring `outcome` on q.
template <typename Derived>
void project(Eigen::MatrixBase<Derived>& psi, unsigned q, bool outcome) {
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (bool(i & bit) != outcome) psi.coeffRef(i) = 0;
  }
}

/// max_i |a_i - e^{i phi} b_i| with phi aligned on b's first nonzero entry.
template <typename DerivedA, typename DerivedB>
typename Eigen::NumTraits<typename DerivedA::Scalar>::Real phase_aligned_error(
    const Eigen::MatrixBase<DerivedA>& actual,
    const Eigen::MatrixBase<DerivedB>& expected) {
  using Scalar = typename DerivedA::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Eigen::Index pivot = 0;
  while (pivot < expected.size() && std::abs(expected.coeff(pivot)) < Real(1e-12)) {
    ++pivot;
  }
  if (pivot == expected.size()) return actual.cwiseAbs().maxCoeff();
  Scalar phase = actual.coeff(pivot) / expected.coeff(pivot);
  if (std::abs(phase) < Real(1e-12)) return Real(1);
  phase /= std::abs(phase);
  return (actual - phase * expected).cwiseAbs().maxCoeff();
}

}  // namespace tdepth::sv
