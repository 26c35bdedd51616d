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

#ifndef SPINKIN_FS_KINEMATICS_HPP
#define SPINKIN_FS_KINEMATICS_HPP

#include <vector>

#include "spinkin/matrix_kernel.hpp"

namespace spinkin {

// Hermitian traceless matrix attached to a base state.
struct TangentVector {
  ComplexMatrix base;
  ComplexMatrix matrix;
};

// ||X||^2 = 1/2 Tr(X^2) for hermitian X
inline double fs_norm_sq(const ComplexMatrix& x) { return 0.5 * (x * x).trace().real(); }

inline void require_generator(const ComplexMatrix& rho, const ComplexMatrix& h) {
  require_same_shape(rho, h);
  require_hermitian(h, "hamiltonian");
}

inline TangentVector velocity(const ComplexMatrix& rho, const ComplexMatrix& h) {
  require_generator(rho, h);
  return {rho, -kI * commutator(h, rho)};
}

// -[H,[H,rho]]
inline ComplexMatrix second_derivative(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return -commutator(h, commutator(h, rho));
}

inline bool is_tangent(const TangentVector& v, double tol = 1e-10) {
  const ComplexMatrix& r = v.base;
  return ((r * v.matrix + v.matrix * r - v.matrix).cwiseAbs().maxCoeff() <= tol) &&
         std::abs(v.matrix.trace()) <= tol && is_hermitian(v.matrix, tol);
}

struct HamiltonianMoments {
  double h1 = 0, h2 = 0, h3 = 0, h4 = 0;
  double variance() const { return h2 - h1 * h1; }
};

inline HamiltonianMoments moments(const ComplexMatrix& rho, const ComplexMatrix& h) {
  require_generator(rho, h);
  const ComplexMatrix h2 = h * h;
  HamiltonianMoments m;
  m.h1 = (rho * h).trace().real();
  m.h2 = (rho * h2).trace().real();
  m.h3 = (rho * h2 * h).trace().real();
  m.h4 = (rho * h2 * h2).trace().real();
  return m;
}

// Pure states: 1/2 Tr(v^2).
inline double speed_sq(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return fs_norm_sq(velocity(rho, h).matrix);
}

inline double speed_sq_variance(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return moments(rho, h).variance();
}

// a = rho rho'' (1-rho) + (1-rho) rho'' rho, pure states only.
inline TangentVector acceleration(const ComplexMatrix& rho, const ComplexMatrix& h) {
  require_generator(rho, h);
  const ComplexMatrix rdd = second_derivative(rho, h);
  const ComplexMatrix rt = identity(rho.rows()) - rho;
  return {rho, rho * rdd * rt + rt * rdd * rho};
}

inline double acc_norm_sq(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return fs_norm_sq(acceleration(rho, h).matrix);
}

inline double acc_norm_sq_closed(const HamiltonianMoments& m) {
  const double h1sq = m.h1 * m.h1;
  return m.h4 - 4 * m.h3 * m.h1 - m.h2 * m.h2 + 8 * m.h2 * h1sq - 4 * h1sq * h1sq;
}

inline double acc_norm_sq_closed(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return acc_norm_sq_closed(moments(rho, h));
}

// ---------------------------------------------------------------------------
// Chart U0: psi = (1, z^1..z^n)/sqrt(Delta), Delta = 1 + sum |z|^2.

struct ChartPoint {
  ComplexVector z;
  double delta() const { return 1.0 + z.squaredNorm(); }
  int n() const { return static_cast<int>(z.size()); }
};

inline ComplexMatrix chart_density(const ChartPoint& p) {
  ComplexVector psi(p.n() + 1);
  psi(0) = 1.0;
  psi.tail(p.n()) = p.z;
  return psi * psi.adjoint() / p.delta();
}

// g(a, b) = g_{a bbar} = 1/2 Delta^-2 (Delta delta_ab - conj(z^a) z^b)
inline ComplexMatrix fs_metric_chart(const ChartPoint& p) {
  const double d = p.delta();
  const ComplexVector w = p.z.conjugate();
  return 0.5 / (d * d) * (d * identity(p.n()) - w * p.z.transpose());
}

// Matrix inverse of fs_metric_chart: 2 Delta (delta_ab + conj(z^a) z^b)
inline ComplexMatrix fs_metric_inverse(const ChartPoint& p) {
  const ComplexVector w = p.z.conjugate();
  return 2.0 * p.delta() * (identity(p.n()) + w * p.z.transpose());
}

// gamma[c](a, b) = Gamma^c_{ab} = -Delta^-1 (delta^c_b conj(z^a) + delta^c_a conj(z^b))
inline std::vector<ComplexMatrix> fs_christoffel(const ChartPoint& p) {
  const int n = p.n();
  const double d = p.delta();
  std::vector<ComplexMatrix> gamma(n, ComplexMatrix::Zero(n, n));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Complex v = 0.0;
        if (c == b) v += std::conj(p.z(a));
        if (c == a) v += std::conj(p.z(b));
        gamma[c](a, b) = -v / d;
      }
  return gamma;
}

// R_{a bbar c dbar}, stored densely.
struct ChartRiemann {
  int n = 0;
  std::vector<Complex> data;
  Complex operator()(int a, int b, int c, int d) const { return data[((a * n + b) * n + c) * n + d]; }
};

// R_{a bbar c dbar} = 2 (g_{a bbar} g_{c dbar} + g_{a dbar} g_{c bbar})
inline ChartRiemann fs_riemann(const ChartPoint& p) {
  const ComplexMatrix g = fs_metric_chart(p);
  ChartRiemann r;
  r.n = p.n();
  r.data.resize(static_cast<std::size_t>(r.n) * r.n * r.n * r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      for (int c = 0; c < r.n; ++c)
        for (int d = 0; d < r.n; ++d)
          r.data[((a * r.n + b) * r.n + c) * r.n + d] = 2.0 * (g(a, b) * g(c, d) + g(a, d) * g(c, b));
  return r;
}

// Holomorphic sectional curvature along e_a.
inline double fs_holomorphic_curvature(const ChartPoint& p, int a) {
  const ChartRiemann r = fs_riemann(p);
  const double gaa = fs_metric_chart(p)(a, a).real();
  return r(a, a, a, a).real() / (gaa * gaa);
}

}  // namespace spinkin

#endif  // SPINKIN_FS_KINEMATICS_HPP
