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

#ifndef SPINKIN_SPIN_ALGEBRA_HPP
#define SPINKIN_SPIN_ALGEBRA_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <compare>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "spinkin/matrix_kernel.hpp"

namespace spinkin {

// Integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice_(2 * v) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static HalfInt from_double(double x) {
    const double t = 2.0 * x;
    const double r = std::round(t);
    if (!std::isfinite(x) || std::abs(t - r) > 1e-9)
      throw InvalidInput("not an integer or half-integer: " + std::to_string(x));
    return from_twice(static_cast<int>(r));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  int twice_ = 0;
};

struct Spin {
  int two_s = 0;

  constexpr Spin() = default;
  explicit constexpr Spin(int twice) : two_s(twice) {}
  static Spin from_double(double s) {
    const HalfInt h = HalfInt::from_double(s);
    if (h.twice() < 0) throw InvalidInput("spin must be non-negative");
    return Spin(h.twice());
  }

  constexpr int dim() const { return two_s + 1; }
  constexpr double s() const { return 0.5 * two_s; }
  constexpr HalfInt half() const { return HalfInt::from_twice(two_s); }
  // m value of basis index k (ordered m = s, s-1, ..., -s)
  constexpr HalfInt m_of(int k) const { return HalfInt::from_twice(two_s - 2 * k); }
  friend constexpr bool operator==(Spin, Spin) = default;
};

struct SpinMatrices {
  ComplexMatrix x, y, z;
  const ComplexMatrix& operator[](int a) const { return a == 0 ? x : (a == 1 ? y : z); }
};

// S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>.
inline ComplexMatrix raising(Spin sp) {
  const int d = sp.dim();
  const double s = sp.s();
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double m = sp.m_of(k).value();
    p(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  return p;
}

inline SpinMatrices spin_matrices(Spin sp) {
  const int d = sp.dim();
  const ComplexMatrix p = raising(sp);
  const ComplexMatrix mi = p.adjoint();
  SpinMatrices out;
  out.x = 0.5 * (p + mi);
  out.y = (p - mi) / Complex(0.0, 2.0);
  out.z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) out.z(k, k) = sp.m_of(k).value();
  return out;
}

inline ComplexMatrix spin_along(const SpinMatrices& s, const Eigen::Vector3d& n) {
  return n(0) * s.x + n(1) * s.y + n(2) * s.z;
}

namespace detail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Arguments given as twice their values; all must be even here.
inline cpp_int fact2(int twice) { return factorial(twice / 2); }

inline bool triangle_ok(int a, int b, int c) {
  return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0;
}

// sign(x) * sqrt(|x|) for an exact rational whose sign tracks the sum.
inline double signed_sqrt(const cpp_rational& square, int sign) {
  return sign * std::sqrt(square.convert_to<double>());
}

template <class Key>
class MemoCache {
 public:
  template <class F>
  double get(const Key& k, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(k);
      if (it != map_.end()) return it->second;
    }
    const double v = compute();
    std::unique_lock lock(mu_);
    map_.emplace(k, v);
    return v;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, double> map_;
};

inline double cg_uncached(int j1, int m1, int j2, int m2, int J, int M) {
  // everything in units of 1/2
  cpp_rational pre(fact2(j1 + j2 - J) * fact2(j1 - j2 + J) * fact2(-j1 + j2 + J),
                   fact2(j1 + j2 + J + 2));
  pre *= (J + 1);
  pre *= cpp_rational(fact2(j1 + m1) * fact2(j1 - m1) * fact2(j2 + m2) * fact2(j2 - m2) *
                      fact2(J + M) * fact2(J - M));
  const int kmin = std::max({0, (j2 - J - m1) / 2, (j1 - J + m2) / 2});
  const int kmax = std::min({(j1 + j2 - J) / 2, (j1 - m1) / 2, (j2 + m2) / 2});
  cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    cpp_int den = factorial(k) * fact2(j1 + j2 - J - 2 * k) * fact2(j1 - m1 - 2 * k) *
                  fact2(j2 + m2 - 2 * k) * fact2(J - j2 + m1 + 2 * k) *
                  fact2(J - j1 - m2 + 2 * k);
    cpp_rational term(1, den);
    sum += (k % 2 == 0) ? term : cpp_rational(-term);
  }
  if (sum == 0) return 0.0;
  const int sign = sum > 0 ? 1 : -1;
  return signed_sqrt(pre * sum * sum, sign);
}

inline cpp_rational delta_sq(int a, int b, int c) {
  return cpp_rational(fact2(a + b - c) * fact2(a - b + c) * fact2(-a + b + c), fact2(a + b + c + 2));
}

inline double six_j_uncached(int j1, int j2, int j3, int j4, int j5, int j6) {
  const cpp_rational pre =
      delta_sq(j1, j2, j3) * delta_sq(j1, j5, j6) * delta_sq(j4, j2, j6) * delta_sq(j4, j5, j3);
  const int a1 = (j1 + j2 + j3) / 2, a2 = (j1 + j5 + j6) / 2, a3 = (j4 + j2 + j6) / 2,
            a4 = (j4 + j5 + j3) / 2;
  const int b1 = (j1 + j2 + j4 + j5) / 2, b2 = (j2 + j3 + j5 + j6) / 2,
            b3 = (j3 + j1 + j6 + j4) / 2;
  const int tmin = std::max({a1, a2, a3, a4});
  const int tmax = std::min({b1, b2, b3});
  cpp_rational sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    cpp_int den = factorial(t - a1) * factorial(t - a2) * factorial(t - a3) * factorial(t - a4) *
                  factorial(b1 - t) * factorial(b2 - t) * factorial(b3 - t);
    cpp_rational term(factorial(t + 1), den);
    sum += (t % 2 == 0) ? term : cpp_rational(-term);
  }
  if (sum == 0) return 0.0;
  const int sign = sum > 0 ? 1 : -1;
  return signed_sqrt(pre * sum * sum, sign);
}

}  // namespace detail

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.
inline double cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  const int a = j1.twice(), am = m1.twice(), b = j2.twice(), bm = m2.twice(), c = J.twice(),
            cm = M.twice();
  if (a < 0 || b < 0 || c < 0) throw InvalidInput("cg: negative angular momentum");
  if ((a + am) % 2 != 0 || (b + bm) % 2 != 0 || (c + cm) % 2 != 0 || (a + b + c) % 2 != 0)
    throw InvalidInput("cg: inconsistent integer/half-integer arguments");
  if (am + bm != cm) return 0.0;
  if (std::abs(am) > a || std::abs(bm) > b || std::abs(cm) > c) return 0.0;
  if (!detail::triangle_ok(a, b, c)) return 0.0;
  static detail::MemoCache<std::array<int, 6>> cache;
  return cache.get({a, am, b, bm, c, cm},
                   [&] { return detail::cg_uncached(a, am, b, bm, c, cm); });
}

// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}; zero when any triad is not admissible.
inline double six_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  const int a = j1.twice(), b = j2.twice(), c = j3.twice(), d = j4.twice(), e = j5.twice(),
            f = j6.twice();
  if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0 || f < 0) return 0.0;
  if (!detail::triangle_ok(a, b, c) || !detail::triangle_ok(a, e, f) ||
      !detail::triangle_ok(d, b, f) || !detail::triangle_ok(d, e, c))
    return 0.0;
  static detail::MemoCache<std::array<int, 6>> cache;
  return cache.get({a, b, c, d, e, f}, [&] { return detail::six_j_uncached(a, b, c, d, e, f); });
}

// (T_LM)_{m m'} = sqrt((2L+1)/(2s+1)) <s m'; L M | s m>, normalized so that
// Tr(T_LM^dagger T_L'M') = delta delta.
inline ComplexMatrix tensor_operator(Spin sp, int L, int M) {
  if (L < 0 || L > sp.two_s) throw InvalidInput("tensor_operator: need 0 <= L <= 2s");
  if (std::abs(M) > L) throw InvalidInput("tensor_operator: need |M| <= L");
  const int d = sp.dim();
  const double norm = std::sqrt((2.0 * L + 1.0) / d);
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      t(a, b) = norm * cg(sp.half(), sp.m_of(b), L, M, sp.half(), sp.m_of(a));
  return t;
}

// Product-expansion factor: T_{l1 m1} T_{l2 m2} = chi(l1,l2,l;s) c^{l m}_{l1 m1, l2 m2} T_{lm}.
inline double chi(int l1, int l2, int l, Spin sp) {
  const HalfInt s = sp.half();
  const double sj = six_j(l1, l2, l, s, s, s);
  if (sj == 0.0) return 0.0;
  const int expo = 2 * l2 + l - sp.two_s;
  const double sign = (expo % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0)) * sj;
}

// A(s) = sqrt(3 / (s(s+1)(2s+1)))
inline double multipole_norm(Spin sp) {
  if (sp.two_s == 0) throw InvalidInput("multipole_norm: undefined for s = 0");
  const double s = sp.s();
  return std::sqrt(3.0 / (s * (s + 1.0) * (2.0 * s + 1.0)));
}

struct AxisMultipoles {
  Complex r_minus, r_zero, r_plus;  // r_{-1}, r_0, r_{+1}
  Complex operator[](int m) const { return m < 0 ? r_minus : (m == 0 ? r_zero : r_plus); }
};

// n.S = sum_m r_m T_{1m}
inline AxisMultipoles axis_to_multipole(const Eigen::Vector3d& n, Spin sp) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw InvalidInput("axis_to_multipole: |n| must be 1");
  const double a = multipole_norm(sp);
  const double r2 = std::sqrt(2.0) * a;
  return {Complex(n(0), n(1)) / r2, Complex(n(2) / a, 0.0), -Complex(n(0), -n(1)) / r2};
}

// rho_LM = Tr(rho T_LM^dagger) for M = L, L-1, ..., -L (index L - M).
inline ComplexVector multipole_expectations(const ComplexMatrix& rho, Spin sp, int L) {
  ComplexVector out = ComplexVector::Zero(2 * L + 1);
  if (L > sp.two_s) return out;
  for (int M = L; M >= -L; --M)
    out(L - M) = (rho * tensor_operator(sp, L, M).adjoint()).trace();
  return out;
}

}  // namespace spinkin

#endif  // SPINKIN_SPIN_ALGEBRA_HPP
