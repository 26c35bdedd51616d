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

#ifndef SPINKIN_MATRIX_KERNEL_HPP
#define SPINKIN_MATRIX_KERNEL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "spinkin/errors.hpp"

namespace spinkin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

inline void require_hermitian(const ComplexMatrix& a, const char* what = "matrix") {
  if (!is_hermitian(a))
    throw InvalidInput(std::string(what) + " is not hermitian within 1e-12");
}

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                       "x" + std::to_string(b.cols()));
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Row-major: vec(A)[i*n + j] = A(i, j). With this layout
// (A kron B^T) vec(C) = vec(A C B).
inline ComplexVector vec(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("vec: matrix must be square");
  const Eigen::Index n = a.rows();
  ComplexVector v(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = a(i, j);
  return v;
}

inline ComplexMatrix unvec(const ComplexVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (n * n != v.size()) throw InvalidInput("unvec: length is not a perfect square");
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = v(i * n + j);
  return a;
}

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns
};

inline EigenSystem eigh(const ComplexMatrix& h) {
  require_hermitian(h, "eigh input");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw Error("eigh: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

// Apply f to the spectrum of a hermitian matrix.
template <class F>
ComplexMatrix hermitian_function(const ComplexMatrix& h, F&& f) {
  const EigenSystem es = eigh(h);
  RealVector fv(es.values.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = f(es.values(i));
  return es.vectors * fv.asDiagonal() * es.vectors.adjoint();
}

enum class Subsystem { first = 1, second = 2 };

// Basis index of |i>_1 |k>_2 is i*d2 + k.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int d1, int d2, Subsystem keep) {
  if (d1 < 1 || d2 < 1 || rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw InvalidInput("partial_trace: dimension mismatch");
  if (keep == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        for (int k = 0; k < d2; ++k) out(i, j) += rho(i * d2 + k, j * d2 + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int k = 0; k < d2; ++k)
    for (int l = 0; l < d2; ++l)
      for (int i = 0; i < d1; ++i) out(k, l) += rho(i * d2 + k, i * d2 + l);
  return out;
}

inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d1, int d2, Subsystem which) {
  if (d1 < 1 || d2 < 1 || rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw InvalidInput("partial_transpose: dimension mismatch");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) {
          if (which == Subsystem::first)
            out(j * d2 + k, i * d2 + l) = rho(i * d2 + k, j * d2 + l);
          else
            out(i * d2 + l, j * d2 + k) = rho(i * d2 + k, j * d2 + l);
        }
  return out;
}

// 1/2 Tr(A^dagger B)
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  return 0.5 * (a.adjoint() * b).trace();
}

// 1/2 Tr(A^dagger B + B A^dagger) = Re Tr(A^dagger B)
inline double hs_metric(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 2.0 * hs_inner(a, b).real();
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

inline double real_trace(const ComplexMatrix& a) { return a.trace().real(); }

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

namespace pauli {
inline ComplexMatrix x() { ComplexMatrix m(2, 2); m << 0, 1, 1, 0; return m; }
inline ComplexMatrix y() { ComplexMatrix m(2, 2); m << 0, -kI, kI, 0; return m; }
inline ComplexMatrix z() { ComplexMatrix m(2, 2); m << 1, 0, 0, -1; return m; }
inline ComplexMatrix axis(int a) { return a == 0 ? x() : (a == 1 ? y() : z()); }
}  // namespace pauli

}  // namespace spinkin

#endif  // SPINKIN_MATRIX_KERNEL_HPP
