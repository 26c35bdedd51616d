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

#ifndef SPINKIN_STATES_HPP
#define SPINKIN_STATES_HPP

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spinkin/matrix_kernel.hpp"
#include "spinkin/spin_algebra.hpp"

namespace spinkin {

inline constexpr double kNormTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kPurityTol = 1e-9;

class PureState {
 public:
  PureState(Spin spin, ComplexVector amplitudes) : spin_(spin), amp_(std::move(amplitudes)) {
    if (amp_.size() != spin_.dim())
      throw InvalidInput("ket length " + std::to_string(amp_.size()) + " does not match 2s+1 = " +
                         std::to_string(spin_.dim()));
    if (std::abs(amp_.norm() - 1.0) > kNormTol) throw InvalidInput("ket is not normalized");
  }

  static PureState normalized(Spin spin, const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("cannot normalize a zero ket");
    return PureState(spin, v / n);
  }

  Spin spin() const { return spin_; }
  int dim() const { return spin_.dim(); }
  const ComplexVector& amplitudes() const { return amp_; }
  ComplexMatrix density() const { return projector(amp_); }

 private:
  Spin spin_;
  ComplexVector amp_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) throw InvalidInput("density matrix must be square");
    require_hermitian(m_, "density matrix");
    if (std::abs(m_.trace() - Complex(1.0)) > kTraceTol)
      throw InvalidInput("density matrix trace is not 1");
    min_eig_ = eigh(m_).values(0);
    if (min_eig_ < -kPsdTol)
      throw InvalidInput("density matrix has negative eigenvalue " + std::to_string(min_eig_));
  }
  explicit DensityMatrix(const PureState& psi) : DensityMatrix(psi.density()) {}

  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }  // NOLINT
  int dim() const { return static_cast<int>(m_.rows()); }
  double min_eigenvalue() const { return min_eig_; }
  double purity() const { return (m_ * m_).trace().real(); }
  bool is_pure() const { return std::abs(purity() - 1.0) <= kPurityTol; }

 private:
  ComplexMatrix m_;
  double min_eig_ = 0.0;
};

// ---------------------------------------------------------------------------
// Majorana constellations

class Constellation {
 public:
  Constellation() = default;
  explicit Constellation(std::vector<Eigen::Vector3d> stars) : stars_(std::move(stars)) {
    for (const auto& s : stars_)
      if (std::abs(s.norm() - 1.0) > 1e-12) throw InvalidInput("star is not a unit vector");
  }
  static Constellation from_angles(const std::vector<std::pair<double, double>>& theta_phi) {
    std::vector<Eigen::Vector3d> v;
    for (auto [th, ph] : theta_phi)
      v.emplace_back(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
    return Constellation(std::move(v));
  }

  const std::vector<Eigen::Vector3d>& stars() const { return stars_; }
  std::size_t size() const { return stars_.size(); }
  Spin spin() const { return Spin(static_cast<int>(stars_.size())); }

 private:
  std::vector<Eigen::Vector3d> stars_;
};

namespace detail {
inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}
}  // namespace detail

// Each star contributes the spinor (cos th/2, e^{i ph} sin th/2); the ket is the
// symmetrized product, c_{s-j} = coef_j / sqrt(C(n, j)).
inline PureState constellation_to_state(const Constellation& c) {
  if (c.size() == 0) throw InvalidInput("empty constellation");
  const int n = static_cast<int>(c.size());
  ComplexVector poly = ComplexVector::Zero(n + 1);
  poly(0) = 1.0;
  int deg = 0;
  for (const auto& star : c.stars()) {
    const double th = std::acos(std::clamp(star(2), -1.0, 1.0));
    const double ph = std::atan2(star(1), star(0));
    const Complex a = std::cos(th / 2);
    const Complex b = std::polar(std::sin(th / 2), ph);
    for (int j = deg + 1; j >= 1; --j) poly(j) = a * poly(j) + b * poly(j - 1);
    poly(0) *= a;
    ++deg;
  }
  for (int j = 0; j <= n; ++j) poly(j) /= std::sqrt(detail::binomial(n, j));
  return PureState::normalized(Spin(n), poly);
}

// Roots of P(x) = sum_j sqrt(C(n,j)) c_{s-j} x^j via the companion matrix;
// each missing top degree is a star at the north pole.
inline Constellation state_to_constellation(const PureState& psi) {
  const int n = psi.spin().two_s;
  if (n == 0) return Constellation();
  std::vector<Complex> p(n + 1);
  double scale = 0.0;
  for (int j = 0; j <= n; ++j) {
    p[j] = std::sqrt(detail::binomial(n, j)) * psi.amplitudes()(j);
    scale = std::max(scale, std::abs(p[j]));
  }
  int deg = n;
  while (deg > 0 && std::abs(p[deg]) <= 1e-14 * scale) --deg;
  std::vector<Eigen::Vector3d> stars;
  for (int k = 0; k < n - deg; ++k) stars.emplace_back(0.0, 0.0, 1.0);
  if (deg > 0) {
    ComplexMatrix comp = ComplexMatrix::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p[i] / p[deg];
    Eigen::ComplexEigenSolver<ComplexMatrix> es(comp);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const Complex x = es.eigenvalues()(i);
      const double r2 = std::norm(x);
      Eigen::Vector3d v(-2.0 * x.real(), 2.0 * x.imag(), r2 - 1.0);
      stars.push_back(v / (r2 + 1.0));
      stars.back().normalize();
    }
  }
  return Constellation(std::move(stars));
}

inline Eigen::Matrix3d angle_gram(double alpha, double beta, double gamma) {
  Eigen::Matrix3d g;
  g << 1.0, std::cos(alpha), std::cos(gamma), std::cos(alpha), 1.0, std::cos(beta),
      std::cos(gamma), std::cos(beta), 1.0;
  return g;
}

inline double angle_gram_min_eigenvalue(double alpha, double beta, double gamma) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(angle_gram(alpha, beta, gamma),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// alpha = angle(1,2), beta = angle(2,3), gamma = angle(1,3). First star at +z,
// second in the xz half-plane x >= 0, third with y >= 0.
inline Constellation constellation_from_pairwise_angles(double alpha, double beta, double gamma,
                                                        double tol = 1e-12) {
  const double lmin = angle_gram_min_eigenvalue(alpha, beta, gamma);
  if (lmin < -tol)
    throw InvalidInput("angle triple is not realizable (Gram min eigenvalue " +
                       std::to_string(lmin) + ")");
  const Eigen::Vector3d n1(0.0, 0.0, 1.0);
  const Eigen::Vector3d n2(std::sin(alpha), 0.0, std::cos(alpha));
  Eigen::Vector3d n3;
  const double sa = std::sin(alpha);
  if (std::abs(sa) < 1e-12) {
    n3 = Eigen::Vector3d(std::sin(gamma), 0.0, std::cos(gamma));
  } else {
    const double z = std::cos(gamma);
    const double x = (std::cos(beta) - std::cos(alpha) * z) / sa;
    // y^2 sin^2(alpha) is the Gram determinant; snap roundoff so planar triples stay planar
    const double det = angle_gram(alpha, beta, gamma).determinant();
    const double y = det <= 1e-15 ? 0.0 : std::sqrt(det) / std::abs(sa);
    n3 = Eigen::Vector3d(x, y, z);
    n3.normalize();
  }
  return Constellation({n1, n2.normalized(), n3});
}

// ---------------------------------------------------------------------------
// Two-qubit symmetric sector

// Columns: |1,1> -> |00>, |1,0> -> (|01>+|10>)/sqrt2, |1,-1> -> |11>.
inline ComplexMatrix symmetric_isometry() {
  ComplexMatrix v = ComplexMatrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::sqrt(2.0);
  v(3, 2) = 1.0;
  return v;
}

inline ComplexMatrix symmetric_embed(const ComplexMatrix& rho3) {
  if (rho3.rows() != 3 || rho3.cols() != 3) throw InvalidInput("symmetric_embed needs a 3x3 state");
  const ComplexMatrix v = symmetric_isometry();
  return v * rho3 * v.adjoint();
}

inline ComplexVector symmetric_embed(const ComplexVector& ket3) {
  if (ket3.size() != 3) throw InvalidInput("symmetric_embed needs a spin-1 ket");
  return symmetric_isometry() * ket3;
}

// Sigma_A = sigma_A (x) I + I (x) sigma_A
inline ComplexMatrix collective_sigma(int a) {
  const ComplexMatrix i2 = identity(2);
  return kron(pauli::axis(a), i2) + kron(i2, pauli::axis(a));
}

// Collective spin Sigma_A / 2.
inline SpinMatrices collective_spin() {
  return {0.5 * collective_sigma(0), 0.5 * collective_sigma(1), 0.5 * collective_sigma(2)};
}

struct SymmetricMixedParams {
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();  // symmetric; upper triangle is read
};

// rho = I/4 + (1/2) n.Sigma + (1/4) sum_AB t_AB sA(x)sB, t symmetric
inline ComplexMatrix build_mixed_matrix(const SymmetricMixedParams& p) {
  ComplexMatrix rho = 0.25 * identity(4);
  for (int a = 0; a < 3; ++a) {
    rho += 0.5 * p.n(a) * collective_sigma(a);
    rho += 0.25 * p.t(a, a) * kron(pauli::axis(a), pauli::axis(a));
    for (int b = a + 1; b < 3; ++b)
      rho += 0.25 * p.t(a, b) *
             (kron(pauli::axis(a), pauli::axis(b)) + kron(pauli::axis(b), pauli::axis(a)));
  }
  return rho;
}

inline DensityMatrix build_mixed(const SymmetricMixedParams& p) {
  ComplexMatrix rho = build_mixed_matrix(p);
  const double lmin = eigh(rho).values(0);
  if (lmin < 0.0) throw DegenerateState("mixed-family parameters give a non-positive matrix", lmin);
  return DensityMatrix(std::move(rho));
}

struct BlochDecomposition {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
};

inline BlochDecomposition bloch_decompose(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput("bloch_decompose needs a 4x4 state");
  const ComplexMatrix i2 = identity(2);
  BlochDecomposition b;
  for (int i = 0; i < 3; ++i) {
    b.x(i) = (rho * kron(pauli::axis(i), i2)).trace().real();
    b.y(i) = (rho * kron(i2, pauli::axis(i))).trace().real();
    for (int j = 0; j < 3; ++j)
      b.T(i, j) = (rho * kron(pauli::axis(i), pauli::axis(j))).trace().real();
  }
  return b;
}

inline ComplexMatrix reconstruct(const BlochDecomposition& b) {
  const ComplexMatrix i2 = identity(2);
  ComplexMatrix rho = identity(4);
  for (int i = 0; i < 3; ++i) {
    rho += b.x(i) * kron(pauli::axis(i), i2) + b.y(i) * kron(i2, pauli::axis(i));
    for (int j = 0; j < 3; ++j) rho += b.T(i, j) * kron(pauli::axis(i), pauli::axis(j));
  }
  return 0.25 * rho;
}

// ---------------------------------------------------------------------------
// Sampling

// splitmix64 finalizer over (master, index)
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline ComplexVector gaussian_ket(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = nd(gen);
    const double im = nd(gen);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

inline PureState random_pure(Spin sp, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return PureState::normalized(sp, gaussian_ket(sp.dim(), gen));
}

// Convex combination of k Haar spin-1 projectors, flat Dirichlet weights.
inline DensityMatrix random_mixed_symmetric(std::uint64_t seed, int k = 3) {
  if (k < 1) throw InvalidInput("mixture needs at least one component");
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) total += (x = ex(gen));
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  for (int i = 0; i < k; ++i) rho += (w[i] / total) * projector(gaussian_ket(3, gen));
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

// Haar-random 3x3 rotation from a uniformly random unit quaternion.
inline Eigen::Matrix3d random_rotation(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::Quaterniond q;
  q.w() = nd(gen);
  q.x() = nd(gen);
  q.y() = nd(gen);
  q.z() = nd(gen);
  return q.normalized().toRotationMatrix();
}

}  // namespace spinkin

#endif  // SPINKIN_STATES_HPP
