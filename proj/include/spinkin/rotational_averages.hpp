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

#ifndef SPINKIN_ROTATIONAL_AVERAGES_HPP
#define SPINKIN_ROTATIONAL_AVERAGES_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "spinkin/bures_geometry.hpp"
#include "spinkin/fs_kinematics.hpp"
#include "spinkin/spin_algebra.hpp"
#include "spinkin/states.hpp"

namespace spinkin {

// ---------------------------------------------------------------------------
// Sphere moments and the six-axis quartic design

using Rational = boost::multiprecision::cpp_rational;

namespace detail {
inline boost::multiprecision::cpp_int double_factorial(int k) {
  boost::multiprecision::cpp_int f = 1;
  for (int i = k; i > 1; i -= 2) f *= i;
  return f;
}
}  // namespace detail

// Normalized average of x1^m1 ... xn^mn over S^{n-1}.
inline Rational monomial_sphere_average(const std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  if (n < 2) throw InvalidInput("monomial_sphere_average: need at least 2 coordinates");
  int total = 0;
  for (int e : m) {
    if (e < 0) throw InvalidInput("monomial_sphere_average: negative exponent");
    if (e % 2 != 0) return Rational(0);
    total += e;
  }
  boost::multiprecision::cpp_int num = detail::double_factorial(n - 2);
  for (int e : m) num *= detail::double_factorial(e - 1);
  return Rational(num, detail::double_factorial(n - 2 + total));
}

// <n_a n_b n_c n_d> over S^2
inline double quartic_moment(int a, int b, int c, int d) {
  return ((a == b && c == d) + (a == c && b == d) + (a == d && b == c)) / 15.0;
}

inline std::array<Eigen::Vector3d, 6> design_points() {
  const double r5 = std::sqrt(5.0);
  const double mu = std::sqrt((5.0 + r5) / 10.0);
  const double nu = std::sqrt((5.0 - r5) / 10.0);
  const double sg = 1.0 / r5;
  return {Eigen::Vector3d(0, 0, 1),           Eigen::Vector3d(2 / r5, 0, sg),
          Eigen::Vector3d(-mu * mu, -nu, sg), Eigen::Vector3d(-mu * mu, nu, sg),
          Eigen::Vector3d(nu * nu, -mu, sg),  Eigen::Vector3d(nu * nu, mu, sg)};
}

inline std::array<Eigen::Vector3d, 6> design_points(const Eigen::Matrix3d& rotation) {
  auto p = design_points();
  for (auto& v : p) v = rotation * v;
  return p;
}

// ---------------------------------------------------------------------------
// Speeds and total variance

enum class StateMetric { automatic, fubini_study, bures, trace };

inline bool is_pure_state(const ComplexMatrix& rho) {
  return std::abs((rho * rho).trace().real() - 1.0) <= kPurityTol;
}

inline StateMetric resolve(StateMetric m, const ComplexMatrix& rho) {
  if (m != StateMetric::automatic) return m;
  return is_pure_state(rho) ? StateMetric::fubini_study : StateMetric::bures;
}

inline double axis_speed_sq(const ComplexMatrix& rho, const ComplexMatrix& h,
                            StateMetric metric = StateMetric::automatic,
                            MetricBackend backend = MetricBackend::eigen) {
  switch (resolve(metric, rho)) {
    case StateMetric::bures:
      return bures_sq(rho, velocity(rho, h).matrix, backend);
    default:
      return speed_sq(rho, h);
  }
}

// sum over x, y, z of the squared speed under S_A
inline double total_variance(const ComplexMatrix& rho, const SpinMatrices& gens,
                             StateMetric metric = StateMetric::automatic,
                             MetricBackend backend = MetricBackend::eigen) {
  const StateMetric m = resolve(metric, rho);
  if (m == StateMetric::bures && backend == MetricBackend::eigen) {
    const BuresSolver solver(rho);
    double d = 0.0;
    for (int a = 0; a < 3; ++a) d += solver.norm_sq(velocity(rho, gens[a]).matrix);
    return d;
  }
  double d = 0.0;
  for (int a = 0; a < 3; ++a) d += axis_speed_sq(rho, gens[a], m, backend);
  return d;
}

// s(s+1) - |<S>|^2
inline double total_variance_pure(const PureState& psi) {
  const SpinMatrices s = spin_matrices(psi.spin());
  const ComplexVector& v = psi.amplitudes();
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) sum += std::norm(v.dot(s[a] * v));
  const double ss = psi.spin().s();
  return ss * (ss + 1.0) - sum;
}

inline double avg_speed_sq(const ComplexMatrix& rho, const SpinMatrices& gens,
                           StateMetric metric = StateMetric::automatic,
                           MetricBackend backend = MetricBackend::eigen) {
  return total_variance(rho, gens, metric, backend) / 3.0;
}

// Bures total variance of a two-qubit state under the collective spin.
inline double total_variance_mixed(const ComplexMatrix& rho4,
                                   MetricBackend backend = MetricBackend::eigen) {
  if (rho4.rows() != 4) throw InvalidInput("total_variance_mixed: need a 4x4 state");
  return total_variance(rho4, collective_spin(), StateMetric::bures, backend);
}

// ---------------------------------------------------------------------------
// Speed excess for two qubits. Reduced norms are Bures (FS if pure).

struct ExcessBreakdown {
  std::array<double, 3> full{}, first{}, second{};
  double total_full() const { return full[0] + full[1] + full[2]; }
  double total_first() const { return first[0] + first[1] + first[2]; }
  double total_second() const { return second[0] + second[1] + second[2]; }
  double excess(int axis) const { return full[axis] - first[axis] - second[axis]; }
  // axis average
  double total_excess() const { return (total_full() - total_first() - total_second()) / 3.0; }
};

inline ExcessBreakdown excess_breakdown(const ComplexMatrix& full_state, const SpinMatrices& full_gens,
                                        const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                                        StateMetric full_metric = StateMetric::automatic) {
  ExcessBreakdown b;
  const SpinMatrices q = spin_matrices(Spin(1));
  for (int a = 0; a < 3; ++a) {
    b.full[a] = axis_speed_sq(full_state, full_gens[a], full_metric);
    b.first[a] = axis_speed_sq(rho1, q[a]);
    b.second[a] = axis_speed_sq(rho2, q[a]);
  }
  return b;
}

inline ExcessBreakdown excess_breakdown(const ComplexMatrix& rho4,
                                        StateMetric full_metric = StateMetric::automatic) {
  if (rho4.rows() != 4) throw InvalidInput("speed excess: need a 4x4 two-qubit state");
  return excess_breakdown(rho4, collective_spin(), partial_trace(rho4, 2, 2, Subsystem::first),
                          partial_trace(rho4, 2, 2, Subsystem::second), full_metric);
}

// F for a rotation about one axis (0, 1, 2)
inline double speed_excess(const ComplexMatrix& rho4, int axis) {
  return excess_breakdown(rho4).excess(axis);
}

inline double total_speed_excess(const ComplexMatrix& rho4) {
  return excess_breakdown(rho4).total_excess();
}

// Symmetric two-qubit states given as spin-1 density matrices; the full-state
// norm is evaluated on the 3x3 representative.
inline ExcessBreakdown excess_breakdown_symmetric(const ComplexMatrix& rho3,
                                                  StateMetric full_metric = StateMetric::automatic) {
  const ComplexMatrix e = symmetric_embed(rho3);
  return excess_breakdown(rho3, spin_matrices(Spin(2)), partial_trace(e, 2, 2, Subsystem::first),
                          partial_trace(e, 2, 2, Subsystem::second), full_metric);
}

// D(rho) + D(rho1) + D(rho2) for a pure two-qubit ket
inline double sum_identity_check(const ComplexVector& ket4) {
  if (ket4.size() != 4) throw InvalidInput("sum identity: need a two-qubit ket");
  const ExcessBreakdown b = excess_breakdown(projector(ket4));
  return b.total_full() + b.total_first() + b.total_second();
}

inline double sum_identity_check(const PureState& spin1) {
  if (spin1.spin().two_s != 2) throw InvalidInput("sum identity: need a spin-1 state");
  return sum_identity_check(symmetric_embed(spin1.amplitudes()));
}

// ---------------------------------------------------------------------------
// Total acceleration of pure states

// Contract the four-index moment tensor with <n_a n_b n_c n_d>.
inline double total_acceleration_exact(const ComplexMatrix& rho, const SpinMatrices& gens) {
  std::array<Complex, 3> e1;
  std::array<std::array<Complex, 3>, 3> e2;
  std::array<std::array<ComplexMatrix, 3>, 3> p2;
  for (int a = 0; a < 3; ++a) e1[a] = (rho * gens[a]).trace();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      p2[a][b] = gens[a] * gens[b];
      e2[a][b] = (rho * p2[a][b]).trace();
    }
  auto e3 = [&](int a, int b, int c) { return (rho * p2[a][b] * gens[c]).trace(); };
  auto e4 = [&](int a, int b, int c, int d) { return (rho * p2[a][b] * p2[c][d]).trace(); };
  auto E = [&](int a, int b, int c, int d) {
    return e4(a, b, c, d) - 4.0 * e3(a, b, c) * e1[d] - e2[a][b] * e2[c][d] +
           8.0 * e2[a][b] * e1[c] * e1[d] - 4.0 * e1[a] * e1[b] * e1[c] * e1[d];
  };
  Complex sum = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sum += E(a, a, b, b) + E(a, b, a, b) + E(a, b, b, a);
  return sum.real() / 15.0;
}

inline double total_acceleration_design(const ComplexMatrix& rho, const SpinMatrices& gens,
                                        const Eigen::Matrix3d& rotation = Eigen::Matrix3d::Identity()) {
  double sum = 0.0;
  for (const auto& n : design_points(rotation)) sum += acc_norm_sq_closed(rho, spin_along(gens, n));
  return sum / 6.0;
}

struct LambdaCoefficients {
  std::array<double, 5> l{};
  double operator[](int i) const { return l[i]; }
};

inline LambdaCoefficients lambda_closed(Spin sp) {
  const double s = sp.s();
  const double q = s * (s + 1.0);
  LambdaCoefficients c;
  c.l[0] = q * (2 * s - 1) * (2 * s + 3) / 45.0;
  c.l[1] = (sp.two_s <= 1) ? 4.0 / 27.0 * q * q * (2 * s + 1)
                           : 4.0 / 135.0 * q * (2 * s + 1) * (q + 3.0);
  c.l[2] = -q * (2 * s - 1) * (2 * s + 1) * (2 * s + 3) / 225.0;
  c.l[3] = 8.0 / 45.0 * std::sqrt(2.0 / 15.0) * q * (2 * s + 1) *
           std::sqrt(std::max(0.0, q * (2 * s - 1) * (2 * s + 1) * (2 * s + 3)));
  c.l[4] = -4.0 / 45.0 * q * q * (2 * s + 1) * (2 * s + 1);
  return c;
}

// Same coefficients assembled from chi / Clebsch-Gordan contractions.
inline LambdaCoefficients lambda_appendix(Spin sp) {
  LambdaCoefficients c;
  if (sp.two_s == 0) return c;
  const double a = multipole_norm(sp);
  const double a4inv = 1.0 / (a * a * a * a);
  const double dim = sp.dim();
  auto c10 = [](int L) { return cg(1, 0, 1, 0, L, 0); };
  double ans1 = 0.0, ans2 = 0.0;
  std::array<double, 3> ans3{}, ans4{};
  for (int L = 0; L <= 2; ++L) {
    const double x = chi(1, 1, L, sp) * c10(L);
    ans1 += x * x * chi(L, L, 0, sp) * cg(L, 0, L, 0, 0, 0) / std::sqrt(dim);
    ans2 += chi(1, 1, L, sp) * chi(L, 1, 1, sp) * c10(L) * cg(L, 0, 1, 0, 1, 0);
    ans3[L] = x * x * a4inv / (2 * L + 1);
    ans4[L] = 8.0 * chi(1, 1, L, sp) * c10(L) * c10(L) * a4inv / (2 * L + 1);
  }
  ans1 *= a4inv;
  ans2 *= 4.0 / 3.0 * a4inv;
  // <T00> = 1/sqrt(2s+1); c^{00}_{1N,1-N} <T_1N><T_1-N> sums to -|rho_1|^2 / sqrt3
  c.l[0] = ans1 - ans3[0] / dim;
  c.l[1] = -ans2 - ans4[0] / (std::sqrt(3.0) * std::sqrt(dim));
  c.l[2] = -ans3[2];
  c.l[3] = ans4[2];
  c.l[4] = -0.8 * a4inv;
  return c;
}

inline double total_acceleration_closed(const ComplexMatrix& rho, Spin sp,
                                        const LambdaCoefficients& lam) {
  if (sp.two_s == 0) return 0.0;
  const ComplexVector r1 = multipole_expectations(rho, sp, 1);  // index 1 - M
  const ComplexVector r2 = multipole_expectations(rho, sp, 2);  // index 2 - M
  const double n1 = r1.squaredNorm();
  const double n2 = r2.squaredNorm();
  Complex t4 = 0.0;
  for (int p = -1; p <= 1; ++p)
    for (int q = -1; q <= 1; ++q)
      t4 += cg(1, p, 1, q, 2, p + q) * r2(2 - (p + q)) * std::conj(r1(1 - p)) * std::conj(r1(1 - q));
  return lam[0] + lam[1] * n1 + lam[2] * n2 + lam[3] * t4.real() + lam[4] * n1 * n1;
}

inline double total_acceleration_closed(const ComplexMatrix& rho, Spin sp) {
  return total_acceleration_closed(rho, sp, lambda_closed(sp));
}

inline double total_acceleration_exact(const PureState& psi) {
  return total_acceleration_exact(psi.density(), spin_matrices(psi.spin()));
}
inline double total_acceleration_design(const PureState& psi) {
  return total_acceleration_design(psi.density(), spin_matrices(psi.spin()));
}
inline double total_acceleration_closed(const PureState& psi) {
  return total_acceleration_closed(psi.density(), psi.spin());
}

// ---------------------------------------------------------------------------
// Mixed states

inline double axis_acc_sq(const ComplexMatrix& rho, const ComplexMatrix& h,
                          StateMetric metric = StateMetric::automatic) {
  switch (resolve(metric, rho)) {
    case StateMetric::bures:
      return bures_sq(rho, mixed_acceleration(rho, h).matrix);
    case StateMetric::trace:
      return fs_norm_sq(second_derivative(rho, h));
    default:
      return acc_norm_sq_closed(rho, h);
  }
}

// Design average of the Bures norm of the covariant acceleration.
inline double total_acceleration_mixed(const ComplexMatrix& rho, const SpinMatrices& gens,
                                       const Eigen::Matrix3d& rotation = Eigen::Matrix3d::Identity()) {
  const BuresSolver solver(rho);
  double sum = 0.0;
  for (const auto& n : design_points(rotation))
    sum += solver.norm_sq(mixed_acceleration(solver, spin_along(gens, n)).matrix);
  return sum / 6.0;
}

inline double total_acceleration(const ComplexMatrix& rho, const SpinMatrices& gens,
                                 StateMetric metric = StateMetric::automatic) {
  const StateMetric m = resolve(metric, rho);
  if (m == StateMetric::bures) return total_acceleration_mixed(rho, gens);
  if (m == StateMetric::fubini_study) return total_acceleration_design(rho, gens);
  double sum = 0.0;
  for (const auto& n : design_points()) sum += axis_acc_sq(rho, spin_along(gens, n), m);
  return sum / 6.0;
}

// ---------------------------------------------------------------------------
// Published closed forms, kept for cross-checking.

namespace formulas {

inline double coherent_acceleration(Spin sp) {
  const double s = sp.s();
  return s * (8 * s * s * (s + 1) - 4 * s - 3) / 45.0;
}

// spin 1, stars at half-angle alpha from the axis
inline double two_star_acceleration(double alpha) {
  const double c = 3.0 + std::cos(2 * alpha);
  return (1459 + 1344 * std::cos(2 * alpha) + 140 * std::cos(4 * alpha) + 128 * std::cos(6 * alpha) +
          std::cos(8 * alpha)) /
         (60.0 * c * c * c * c);
}

// spin 3/2, three stars with equal pairwise angle alpha
inline double equal_angle_acceleration(double alpha) {
  const double c = std::cos(alpha) + 1.0;
  return (5774 * std::cos(alpha) + 1793 * std::cos(2 * alpha) + 1027 * std::cos(3 * alpha) +
          82 * std::cos(4 * alpha) - 17 * std::cos(5 * alpha) - std::cos(6 * alpha) + 2862) /
         (1440.0 * c * c * c * c);
}

// spin 1 ket (cos A, 0, -sin A)
inline double spin1_real_ket_acceleration(double A) {
  return (8.0 + std::cos(4 * A) - 3.0 * std::cos(8 * A)) / 30.0;
}

inline double mixed_n_total_variance(double r) { return 4 * r * r / (1 - 4 * r * r); }
inline double mixed_n_reduced_variance(double r) { return 2 * r * r; }
// D(rho) - 2 D(rho1), summed over axes
inline double mixed_n_excess_sum(double r) { return 16 * r * r * r * r / (1 - 4 * r * r); }

// n = 0 family; t is the trace of the correlation block
inline double mixed_t_total_variance(double k2, double k3, double t) {
  const double num = -256 * k2 * k2 + 96 * t * k3 - 2 * std::pow(t, 4) - 48 * t * t * k2 -
                     6 * t * t * t + 288 * k3 - 64 * t * k2 + 14 * t * t + 240 * k2 + 30 * t - 36;
  const double den = 64 * k3 + 64 * k2 + 4 * t * t + 8 * t - 12;
  return num / den;
}

}  // namespace formulas

}  // namespace spinkin

#endif  // SPINKIN_ROTATIONAL_AVERAGES_HPP
