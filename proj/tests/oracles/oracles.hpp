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


// Independent reference computations used only by the tests.
#ifndef SPINKIN_TESTS_ORACLES_HPP
#define SPINKIN_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "spinkin/spinkin.hpp"

namespace oracle {

using spinkin::Complex;
using spinkin::ComplexMatrix;
using spinkin::ComplexVector;
using spinkin::Spin;

// Coupled basis of j1 (x) j2 built from highest-weight vectors and lowering,
// with the Condon-Shortley phase <j1 j1; j2 J-j1 | J J> > 0. No Racah sums.
class CoupledBasis {
 public:
  CoupledBasis(int two_j1, int two_j2) : a_(two_j1), b_(two_j2) {
    const Spin s1(a_), s2(b_);
    const int d1 = s1.dim(), d2 = s2.dim();
    const ComplexMatrix lower = spinkin::kron(spinkin::raising(s1).adjoint(), spinkin::identity(d2)) +
                                spinkin::kron(spinkin::identity(d1), spinkin::raising(s2).adjoint());
    std::map<int, std::vector<ComplexVector>> found;  // by two_M
    for (int tJ = a_ + b_; tJ >= std::abs(a_ - b_); tJ -= 2) {
      // candidates in the M = J sector orthogonal to states of larger J
      ComplexVector best;
      double best_norm = -1;
      for (int k1 = 0; k1 < d1; ++k1)
        for (int k2 = 0; k2 < d2; ++k2) {
          if ((a_ - 2 * k1) + (b_ - 2 * k2) != tJ) continue;
          ComplexVector e = ComplexVector::Zero(d1 * d2);
          e(k1 * d2 + k2) = 1.0;
          for (const auto& v : found[tJ]) e -= v * v.dot(e);
          if (e.norm() > best_norm) {
            best_norm = e.norm();
            best = e;
          }
        }
      best /= best.norm();
      // phase: component with m1 = j1 positive
      const int k2 = (b_ - (tJ - a_)) / 2;
      const Complex c = best(0 * d2 + k2);
      best *= std::abs(c) / c;
      ComplexVector cur = best;
      for (int tM = tJ; tM >= -tJ; tM -= 2) {
        states_[{tJ, tM}] = cur;
        found[tM].push_back(cur);
        if (tM > -tJ) {
          const double J = 0.5 * tJ, M = 0.5 * tM;
          cur = lower * cur / std::sqrt(J * (J + 1) - M * (M - 1));
        }
      }
    }
    d2_ = d2;
  }

  double cg(int two_m1, int two_m2, int two_J, int two_M) const {
    auto it = states_.find({two_J, two_M});
    if (it == states_.end()) return 0.0;
    const int k1 = (a_ - two_m1) / 2, k2 = (b_ - two_m2) / 2;
    return it->second(k1 * d2_ + k2).real();
  }

 private:
  int a_, b_, d2_ = 1;
  std::map<std::pair<int, int>, ComplexVector> states_;
};

inline double cg(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2) return 0.0;
  return CoupledBasis(two_j1, two_j2).cg(two_m1, two_m2, two_J, two_M);
}

// 6j from the overlap of the two coupling orders of three angular momenta:
// <(j1 j2) j12, j3; J | j1, (j2 j3) j23; J>
//   = (-1)^{j1+j2+j3+J} sqrt((2 j12 + 1)(2 j23 + 1)) {j1 j2 j12; j3 J j23}
inline double six_j(int a, int b, int c, int d, int e, int f) {
  // {j1 j2 j12; j3 J j23} = {a b c; d e f}
  const int j1 = a, j2 = b, j12 = c, j3 = d, J = e, j23 = f;
  const CoupledBasis c12(j1, j2), c123(j12, j3), c23(j2, j3), c1_23(j1, j23);
  const int M = J;  // any M works; use the top one
  double overlap = 0.0;
  for (int m1 = -j1; m1 <= j1; m1 += 2)
    for (int m2 = -j2; m2 <= j2; m2 += 2) {
      const int m3 = M - m1 - m2;
      if (std::abs(m3) > j3) continue;
      const double left = c12.cg(m1, m2, j12, m1 + m2) * c123.cg(m1 + m2, m3, J, M);
      const double right = c23.cg(m2, m3, j23, m2 + m3) * c1_23.cg(m1, m2 + m3, J, M);
      overlap += left * right;
    }
  const int phase2 = j1 + j2 + j3 + J;  // twice the exponent
  const double sign = ((phase2 / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * overlap / std::sqrt((j12 + 1.0) * (j23 + 1.0));
}

// Bures G by a dense 16x16 (or n^2) solve of (rho (x) I + I (x) rho^T) vec G = vec X.
inline ComplexMatrix dense_g(const ComplexMatrix& rho, const ComplexMatrix& x) {
  const ComplexMatrix r = spinkin::r_superoperator(rho);
  return spinkin::unvec(r.fullPivLu().solve(spinkin::vec(x)));
}

inline ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(nd(g), nd(g));
  return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix random_matrix(int r, int c, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd;
  ComplexMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(nd(g), nd(g));
  return m;
}

// Full-rank random density (Ginibre), optionally mixed with the identity.
inline ComplexMatrix random_density(int n, std::uint64_t seed, double floor = 0.0) {
  const ComplexMatrix g = random_matrix(n, n, seed);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return (1.0 - floor) * rho + floor / n * spinkin::identity(n);
}

inline ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, n, seed));
  return qr.householderQ() * spinkin::identity(n);
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle

#endif  // SPINKIN_TESTS_ORACLES_HPP
