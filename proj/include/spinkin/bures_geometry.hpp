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

#ifndef SPINKIN_BURES_GEOMETRY_HPP
#define SPINKIN_BURES_GEOMETRY_HPP

#include <Eigen/LU>
#include <array>
#include <functional>
#include <vector>

#include "spinkin/fs_kinematics.hpp"
#include "spinkin/matrix_kernel.hpp"

namespace spinkin {

inline constexpr double kPositivityThreshold = 1e-9;

struct GOperator {
  ComplexMatrix base;
  ComplexMatrix matrix;
};

// Holds one eigendecomposition of rho and solves X = rho G + G rho against it.
class BuresSolver {
 public:
  explicit BuresSolver(const ComplexMatrix& rho, double eps = kPositivityThreshold) : rho_(rho) {
    es_ = eigh(rho);
    if (es_.values(0) <= eps)
      throw DegenerateState("Bures solver needs a strictly positive state", es_.values(0));
  }

  const ComplexMatrix& rho() const { return rho_; }
  double min_eigenvalue() const { return es_.values(0); }

  ComplexMatrix solve(const ComplexMatrix& x) const {
    require_same_shape(rho_, x);
    require_hermitian(x, "tangent direction");
    const ComplexMatrix& v = es_.vectors;
    ComplexMatrix xe = v.adjoint() * x * v;
    for (Eigen::Index i = 0; i < xe.rows(); ++i)
      for (Eigen::Index j = 0; j < xe.cols(); ++j) xe(i, j) /= es_.values(i) + es_.values(j);
    return v * xe * v.adjoint();
  }

  GOperator solve_g(const ComplexMatrix& x) const { return {rho_, solve(x)}; }

  // 1/2 Tr(G X)
  double norm_sq(const ComplexMatrix& x) const { return 0.5 * (solve(x) * x).trace().real(); }

  // 1/2 Tr(rho (G1 G2 + G2 G1))
  double inner(const ComplexMatrix& x1, const ComplexMatrix& x2) const {
    const ComplexMatrix g1 = solve(x1);
    const ComplexMatrix g2 = solve(x2);
    return 0.5 * (rho_ * anticommutator(g1, g2)).trace().real();
  }

 private:
  ComplexMatrix rho_;
  EigenSystem es_;
};

inline GOperator solve_g(const ComplexMatrix& rho, const ComplexMatrix& x) {
  return BuresSolver(rho).solve_g(x);
}

inline double bures_sq(const ComplexMatrix& rho, const ComplexMatrix& x) {
  return BuresSolver(rho).norm_sq(x);
}

inline double bures_inner(const ComplexMatrix& rho, const ComplexMatrix& x1,
                          const ComplexMatrix& x2) {
  return BuresSolver(rho).inner(x1, x2);
}

// R = rho (x) I + I (x) rho^T acting on row-major vec(G).
inline ComplexMatrix r_superoperator(const ComplexMatrix& rho) {
  const ComplexMatrix id = identity(rho.rows());
  return kron(rho, id) + kron(id, rho.transpose());
}

// ---------------------------------------------------------------------------
// Closed-form inverse of R for 4x4 states.

struct DittmannData {
  std::array<double, 4> k{};  // det(l - rho) = l^4 + k1 l^3 + k2 l^2 + k3 l + k4
  Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
  std::array<ComplexMatrix, 4> powers;  // rho^0 .. rho^3
};

inline std::array<double, 4> charpoly_coefficients(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput("characteristic polynomial: need 4x4");
  ComplexMatrix pw = rho;
  std::array<double, 5> p{};
  for (int m = 1; m <= 4; ++m) {
    p[m] = pw.trace().real();
    pw = (pw * rho).eval();
  }
  // Newton identities for the elementary symmetric polynomials.
  const double e1 = p[1];
  const double e2 = (e1 * p[1] - p[2]) / 2.0;
  const double e3 = (e2 * p[1] - e1 * p[2] + p[3]) / 3.0;
  const double e4 = (e3 * p[1] - e2 * p[2] + e1 * p[3] - p[4]) / 4.0;
  return {-e1, e2, -e3, e4};
}

inline DittmannData dittmann_data(const ComplexMatrix& rho) {
  require_hermitian(rho, "state");
  DittmannData d;
  d.k = charpoly_coefficients(rho);
  const auto [k1, k2, k3, k4] = d.k;
  Eigen::Matrix4d K, N;
  K << 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, -k4, -k3, -k2, -k1;
  N << k3, k2, k1, 1, -k2, -k1, -1, 0, k1, 1, 0, 0, -1, 0, 0, 0;
  const Eigen::Matrix4d X = -K.transpose();
  const Eigen::Matrix4d X2 = X * X;
  const Eigen::Matrix4d chiX = X2 * X2 + k1 * X2 * X + k2 * X2 + k3 * X + k4 * Eigen::Matrix4d::Identity();
  Eigen::FullPivLU<Eigen::Matrix4d> lu(chiX);
  const double lmin = eigh(rho).values(0);
  if (!lu.isInvertible() || lmin <= kPositivityThreshold)
    throw DegenerateState("Dittmann inverse needs a strictly positive 4x4 state", lmin);
  d.A = -lu.solve(N);
  d.powers[0] = identity(4);
  for (int i = 1; i < 4; ++i) d.powers[i] = d.powers[i - 1] * rho;
  return d;
}

// R^-1 = sum_ij A_ij rho^{i-1} (x) (rho^T)^{j-1}
inline ComplexMatrix dittmann_inverse(const DittmannData& d) {
  ComplexMatrix out = ComplexMatrix::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out += d.A(i, j) * kron(d.powers[i], d.powers[j].transpose());
  return out;
}

inline ComplexMatrix dittmann_inverse(const ComplexMatrix& rho) {
  return dittmann_inverse(dittmann_data(rho));
}

// g(X, X) = 1/2 sum_ij A_ij Tr(X rho^{i-1} X rho^{j-1})
inline double dittmann_metric(const DittmannData& d, const ComplexMatrix& x) {
  std::array<ComplexMatrix, 4> xp;
  for (int i = 0; i < 4; ++i) xp[i] = x * d.powers[i];
  double g = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g += d.A(i, j) * (xp[i] * xp[j]).trace().real();
  return 0.5 * g;
}

inline double dittmann_metric(const ComplexMatrix& rho, const ComplexMatrix& x) {
  require_same_shape(rho, x);
  return dittmann_metric(dittmann_data(rho), x);
}

enum class MetricBackend { eigen, dittmann };

inline double bures_sq(const ComplexMatrix& rho, const ComplexMatrix& x, MetricBackend b) {
  return b == MetricBackend::dittmann ? dittmann_metric(rho, x) : bures_sq(rho, x);
}

// ---------------------------------------------------------------------------
// Covariant acceleration of a Hamiltonian curve through a mixed state.

inline TangentVector mixed_acceleration(const BuresSolver& solver, const ComplexMatrix& h) {
  const ComplexMatrix& rho = solver.rho();
  require_generator(rho, h);
  const ComplexMatrix g = solver.solve(-kI * commutator(h, rho));
  const ComplexMatrix grg = g * rho * g;
  return {rho, second_derivative(rho, h) - 2.0 * grg + 2.0 * grg.trace().real() * rho};
}

inline TangentVector mixed_acceleration(const ComplexMatrix& rho, const ComplexMatrix& h) {
  return mixed_acceleration(BuresSolver(rho), h);
}

// ---------------------------------------------------------------------------
// Christoffel symbols of the Bures metric in a caller-supplied chart.

struct ChartJet {
  ComplexMatrix rho;
  std::vector<ComplexMatrix> d1;               // d rho / d mu
  std::vector<std::vector<ComplexMatrix>> d2;  // d2 rho / d mu d nu
  int dim() const { return static_cast<int>(d1.size()); }
};

using DensityFamily = std::function<ComplexMatrix(const std::vector<double>&)>;

// Central differences, step h.
inline ChartJet finite_difference_jet(const DensityFamily& f, const std::vector<double>& mu,
                                      double h = 1e-4) {
  const int n = static_cast<int>(mu.size());
  ChartJet jet;
  jet.rho = f(mu);
  jet.d1.resize(n);
  jet.d2.assign(n, std::vector<ComplexMatrix>(n));
  auto shifted = [&](int a, double da, int b, double db) {
    std::vector<double> m = mu;
    m[a] += da;
    if (b >= 0) m[b] += db;
    return f(m);
  };
  std::vector<ComplexMatrix> plus(n), minus(n);
  for (int a = 0; a < n; ++a) {
    plus[a] = shifted(a, h, -1, 0);
    minus[a] = shifted(a, -h, -1, 0);
    jet.d1[a] = (plus[a] - minus[a]) / (2 * h);
    jet.d2[a][a] = (plus[a] - 2.0 * jet.rho + minus[a]) / (h * h);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      jet.d2[a][b] = (shifted(a, h, b, h) - shifted(a, h, b, -h) - shifted(a, -h, b, h) +
                      shifted(a, -h, b, -h)) /
                     (4 * h * h);
      jet.d2[b][a] = jet.d2[a][b];
    }
  return jet;
}

inline RealMatrix bures_metric_chart(const ChartJet& jet) {
  const BuresSolver solver(jet.rho);
  const int n = jet.dim();
  std::vector<ComplexMatrix> g(n);
  for (int a = 0; a < n; ++a) g[a] = solver.solve(jet.d1[a]);
  RealMatrix out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      out(a, b) = out(b, a) = 0.5 * (jet.rho * anticommutator(g[a], g[b])).trace().real();
  return out;
}

// gamma[beta](mu, nu) = 1/2 Tr(G_beta [rho_{mu nu} - G_mu rho G_nu - G_nu rho G_mu])
inline std::vector<RealMatrix> bures_christoffel(const ChartJet& jet) {
  const BuresSolver solver(jet.rho);
  const int n = jet.dim();
  std::vector<ComplexMatrix> g(n);
  for (int a = 0; a < n; ++a) g[a] = solver.solve(jet.d1[a]);
  std::vector<RealMatrix> gamma(n, RealMatrix::Zero(n, n));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu; nu < n; ++nu) {
      const ComplexMatrix inner = jet.d2[mu][nu] - g[mu] * jet.rho * g[nu] - g[nu] * jet.rho * g[mu];
      for (int beta = 0; beta < n; ++beta) {
        const double v = 0.5 * (g[beta] * inner).trace().real();
        gamma[beta](mu, nu) = gamma[beta](nu, mu) = v;
      }
    }
  return gamma;
}

// Gamma^alpha_{mu nu} = g^{alpha beta} Gamma_{beta mu nu}
inline std::vector<RealMatrix> raise_christoffel(const RealMatrix& metric,
                                                 const std::vector<RealMatrix>& lowered) {
  const int n = static_cast<int>(lowered.size());
  const RealMatrix ginv = metric.inverse();
  std::vector<RealMatrix> up(n, RealMatrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) up[a] += ginv(a, b) * lowered[b];
  return up;
}

}  // namespace spinkin

#endif  // SPINKIN_BURES_GEOMETRY_HPP
