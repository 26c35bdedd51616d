// Copyright 2026 The spinkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINKIN_ENTANGLEMENT_MEASURES_HPP
#define SPINKIN_ENTANGLEMENT_MEASURES_HPP

#include <algorithm>
#include <cmath>
#include <functional>

#include "spinkin/matrix_kernel.hpp"
#include "spinkin/states.hpp"

namespace spinkin {

inline constexpr double kClampTol = 1e-12;

namespace detail {
inline void require_two_qubit(const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput(std::string(what) + ": need a 4x4 state");
}
inline double clamp_nonneg(double x) {
  if (x < -kClampTol) throw InvalidInput("matrix expected PSD has eigenvalue " + std::to_string(x));
  return std::max(0.0, x);
}
}  // namespace detail

// Wootters: max(0, l1 - l2 - l3 - l4), l the decreasing eigenvalues of
// sqrt(sqrt(rho) mu(rho) sqrt(rho)), mu(rho) = (sy (x) sy) rho* (sy (x) sy).
inline double concurrence(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho, "concurrence");
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * rho.conjugate() * yy;
  const ComplexMatrix sq = hermitian_function(rho, [](double x) { return std::sqrt(detail::clamp_nonneg(x)); });
  ComplexMatrix m = sq * flipped * sq;
  m = (0.5 * (m + m.adjoint())).eval();  // roundoff only; m is hermitian in exact arithmetic
  RealVector l = eigh(m).values;
  for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = std::sqrt(detail::clamp_nonneg(l(i)));
  std::sort(l.data(), l.data() + l.size(), std::greater<>());
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

// Pure two-qubit states: sqrt(2 (1 - Tr rho1^2)) = sqrt(1 - |x|^2).
inline double concurrence_pure(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho, "concurrence_pure");
  const ComplexMatrix r1 = partial_trace(rho, 2, 2, Subsystem::first);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - (r1 * r1).trace().real())));
}

// (|rho^{T_A}|_1 - 1) / 2
inline double negativity(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho, "negativity");
  const RealVector ev = eigh(partial_transpose(rho, 2, 2, Subsystem::first)).values;
  return (ev.cwiseAbs().sum() - 1.0) / 2.0;
}

// natural log; 0 log 0 = 0
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  const RealVector ev = eigh(rho).values;
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = detail::clamp_nonneg(ev(i));
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

inline double linear_entropy(const ComplexMatrix& rho) {
  return 2.0 * (1.0 - (rho * rho).trace().real());
}

// 2 * 1/4 (|y|^2 + |T|_F^2 - k), k the top eigenvalue of y y^T + T^T T
inline double geometric_discord(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho, "geometric_discord");
  const BlochDecomposition b = bloch_decompose(rho);
  const Eigen::Matrix3d m = b.y * b.y.transpose() + b.T.transpose() * b.T;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
  const double k = es.eigenvalues()(2);
  return 0.5 * (b.y.squaredNorm() + b.T.squaredNorm() - k);
}

struct MeasurePanel {
  double concurrence = 0, negativity = 0, s_vn = 0, s_vn_reduced = 0, s_lin = 0,
         s_lin_reduced = 0, geo_discord = 0;
};

inline MeasurePanel measure_panel(const ComplexMatrix& rho4) {
  detail::require_two_qubit(rho4, "measure_panel");
  const ComplexMatrix r1 = partial_trace(rho4, 2, 2, Subsystem::first);
  MeasurePanel p;
  p.concurrence = concurrence(rho4);
  p.negativity = negativity(rho4);
  p.s_vn = von_neumann_entropy(rho4);
  p.s_vn_reduced = von_neumann_entropy(r1);
  p.s_lin = linear_entropy(rho4);
  p.s_lin_reduced = linear_entropy(r1);
  p.geo_discord = geometric_discord(rho4);
  return p;
}

}  // namespace spinkin

#endif  // SPINKIN_ENTANGLEMENT_MEASURES_HPP
