#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

using namespace spinkin;

namespace {

const double kTable[4][5] = {
    {0, 1.0 / 6, 0, 0, -1.0 / 5},
    {2.0 / 9, 8.0 / 9, -2.0 / 15, 32.0 / 15, -16.0 / 5},
    {1, 3, -4.0 / 5, 16 * std::sqrt(2.0 / 3), -20},
    {14.0 / 5, 8, -14.0 / 5, 32 * std::sqrt(7.0 / 3), -80},
};

}  // namespace

TEST(SphereMoments, MonomialAverages) {
  using boost::multiprecision::cpp_rational;
  EXPECT_EQ(monomial_sphere_average({2, 0, 0}), cpp_rational(1, 3));
  EXPECT_EQ(monomial_sphere_average({4, 0, 0}), cpp_rational(1, 5));
  EXPECT_EQ(monomial_sphere_average({2, 2, 0}), cpp_rational(1, 15));
  EXPECT_EQ(monomial_sphere_average({2, 2, 2}), cpp_rational(1, 105));
  EXPECT_EQ(monomial_sphere_average({1, 1, 0}), cpp_rational(0));
  EXPECT_EQ(monomial_sphere_average({2, 0}), cpp_rational(1, 2));
  EXPECT_EQ(monomial_sphere_average({2, 0, 0, 0}), cpp_rational(1, 4));
  EXPECT_THROW(monomial_sphere_average({2}), InvalidInput);
  EXPECT_NEAR(quartic_moment(0, 0, 0, 0), 0.2, 1e-16);
  EXPECT_NEAR(quartic_moment(0, 0, 1, 1), 1.0 / 15, 1e-16);
  EXPECT_EQ(quartic_moment(0, 1, 1, 2), 0.0);
}

TEST(SphereMoments, MonteCarloAgreesWithExactValues) {
  std::mt19937_64 g(1);
  std::normal_distribution<double> nd;
  const int n = 200000;
  double s4 = 0, s22 = 0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d v = Eigen::Vector3d(nd(g), nd(g), nd(g)).normalized();
    s4 += std::pow(v(0), 4);
    s22 += v(0) * v(0) * v(1) * v(1);
  }
  EXPECT_NEAR(s4 / n, 0.2, 5e-3);
  EXPECT_NEAR(s22 / n, 1.0 / 15, 3e-3);
}

TEST(Design, AveragesQuarticsExactly) {
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    const auto pts = seed == 0 ? design_points() : design_points(random_rotation(seed));
    for (const auto& p : pts) EXPECT_NEAR(p.norm(), 1.0, 1e-15);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        const int c = 4 - a - b;
        double avg = 0;
        for (const auto& p : pts) avg += std::pow(p(0), a) * std::pow(p(1), b) * std::pow(p(2), c);
        avg /= 6.0;
        EXPECT_NEAR(avg, monomial_sphere_average({a, b, c}).convert_to<double>(), 1e-14) << a << b << c;
      }
  }
}

TEST(Lambda, TableValues) {
  for (int ts = 1; ts <= 4; ++ts) {
    const auto cl = lambda_closed(Spin(ts));
    const auto ap = lambda_appendix(Spin(ts));
    for (int i = 0; i < 5; ++i) {
      EXPECT_NEAR(cl[i], kTable[ts - 1][i], 1e-12) << ts << ' ' << i;
      EXPECT_NEAR(ap[i], kTable[ts - 1][i], 1e-12) << ts << ' ' << i;
    }
  }
}

TEST(Lambda, AppendixMatchesClosedBeyondTable) {
  for (int ts = 5; ts <= 8; ++ts) {
    const auto cl = lambda_closed(Spin(ts));
    const auto ap = lambda_appendix(Spin(ts));
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(ap[i], cl[i], 1e-10 * std::max(1.0, std::abs(cl[i])));
  }
}

TEST(TotalAcceleration, RoutesAgreeOnRandomStates) {
  for (int ts = 1; ts <= 5; ++ts)
    for (std::uint64_t k = 0; k < 20; ++k) {
      const PureState psi = random_pure(Spin(ts), 10 * ts + k);
      const double e = total_acceleration_exact(psi);
      EXPECT_NEAR(total_acceleration_design(psi), e, 1e-10);
      EXPECT_NEAR(total_acceleration_closed(psi), e, 1e-10);
      EXPECT_NEAR(total_acceleration_design(psi.density(), spin_matrices(psi.spin()), random_rotation(k)), e, 1e-10);
    }
}

TEST(TotalAcceleration, AnticoherentOrderTwoIsLambdaOne) {
  // spin-2 tetrahedral state (1, 0, 0, sqrt2, 0) / sqrt3
  ComplexVector v = ComplexVector::Zero(5);
  v(0) = 1;
  v(3) = std::sqrt(2.0);
  const PureState psi(Spin(4), v / std::sqrt(3.0));
  EXPECT_LT(multipole_expectations(psi.density(), Spin(4), 1).norm(), 1e-14);
  EXPECT_LT(multipole_expectations(psi.density(), Spin(4), 2).norm(), 1e-14);
  EXPECT_NEAR(total_acceleration_exact(psi), 14.0 / 5, 1e-12);
}

TEST(TotalAcceleration, SpinOneRealKetCurve) {
  for (double A : {0.0, 0.3, 0.7, 1.2}) {
    ComplexVector v(3);
    v << std::cos(A), 0, -std::sin(A);
    EXPECT_NEAR(total_acceleration_exact(PureState(Spin(2), v)), formulas::spin1_real_ket_acceleration(A), 1e-12);
  }
}

TEST(Variance, BoundsAndPureFormula) {
  for (int ts = 2; ts <= 4; ++ts) {
    const double s = 0.5 * ts;
    for (std::uint64_t k = 0; k < 50; ++k) {
      const PureState psi = random_pure(Spin(ts), 900 + k);
      const double d = total_variance(psi.density(), spin_matrices(psi.spin()));
      EXPECT_NEAR(d, total_variance_pure(psi), 1e-12);
      EXPECT_GE(d, s - 1e-12);
      EXPECT_LE(d, s * (s + 1) + 1e-12);
      EXPECT_NEAR(3 * avg_speed_sq(psi.density(), spin_matrices(psi.spin())), d, 1e-12);
    }
  }
  ComplexVector up = ComplexVector::Zero(4);
  up(0) = 1;
  EXPECT_NEAR(total_variance_pure(PureState(Spin(3), up)), 1.5, 1e-14);
}

TEST(Variance, MetricSelection) {
  const ComplexMatrix p = random_pure(Spin(2), 1).density();
  EXPECT_EQ(resolve(StateMetric::automatic, p), StateMetric::fubini_study);
  EXPECT_EQ(resolve(StateMetric::automatic, identity(3) / 3.0), StateMetric::bures);
  EXPECT_EQ(resolve(StateMetric::trace, p), StateMetric::trace);
  EXPECT_THROW(total_variance(p, spin_matrices(Spin(2)), StateMetric::bures), DegenerateState);
}

TEST(Excess, PureSymmetricIdentities) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const PureState psi = random_pure(Spin(2), 77 + k);
    EXPECT_NEAR(sum_identity_check(psi), 2.0, 1e-9);
    const ComplexVector k4 = symmetric_embed(psi.amplitudes());
    const double d = total_variance_pure(psi);
    EXPECT_NEAR(total_speed_excess(projector(k4)), 2.0 / 3.0 * (d - 1), 1e-9);
    const ExcessBreakdown sym = excess_breakdown_symmetric(psi.density());
    EXPECT_NEAR(sym.total_excess(), 2.0 / 3.0 * (d - 1), 1e-9);
  }
}

TEST(Excess, PsiPmExample) {
  ComplexVector k = ComplexVector::Zero(4);
  k(0) = 1 / std::sqrt(2.0);
  k(3) = -1 / std::sqrt(2.0);
  const ExcessBreakdown b = excess_breakdown(projector(k));
  EXPECT_NEAR(b.full[2], 1.0, 1e-12);
  EXPECT_NEAR(b.first[2], 0.0, 1e-12);
  EXPECT_NEAR(b.second[2], 0.0, 1e-12);
  EXPECT_NEAR(b.excess(2), 1.0, 1e-12);
  EXPECT_NEAR(b.total_full(), 2.0, 1e-12);
}

TEST(Excess, MixedFamilyClosedForms) {
  for (double r : {0.05, 0.1, 0.15, 0.2}) {
    SymmetricMixedParams p;
    p.n = Eigen::Vector3d(0, 0, r);
    const ComplexMatrix rho = build_mixed(p).matrix();
    EXPECT_NEAR(total_variance_mixed(rho), formulas::mixed_n_total_variance(r), 1e-8);
    const ExcessBreakdown b = excess_breakdown(rho, StateMetric::bures);
    EXPECT_NEAR(b.total_first(), formulas::mixed_n_reduced_variance(r), 1e-8);
    EXPECT_NEAR(3 * b.total_excess(), formulas::mixed_n_excess_sum(r), 1e-8);
  }
}

TEST(Excess, MixedFamilyCorrelationBlock) {
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int k = 0; k < 20; ++k) {
    SymmetricMixedParams p;
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) p.t(a, b) = p.t(b, a) = u(g);
    const ComplexMatrix rho = build_mixed(p).matrix();
    const auto c = charpoly_coefficients(rho);
    const double want = formulas::mixed_t_total_variance(c[1], c[2], p.t.trace());
    EXPECT_NEAR(total_variance_mixed(rho, MetricBackend::dittmann), want, 1e-8);
    EXPECT_NEAR(total_variance_mixed(rho, MetricBackend::eigen), want, 1e-8);
  }
}

TEST(MixedAcceleration, DesignIndependent) {
  const ComplexMatrix rho = random_mixed_symmetric(3).matrix();
  const SpinMatrices s = spin_matrices(Spin(2));
  EXPECT_NEAR(total_acceleration_mixed(rho, s), total_acceleration_mixed(rho, s, random_rotation(8)), 1e-10);
}

TEST(Formulas, CoherentAndTwoStar) {
  EXPECT_NEAR(formulas::two_star_acceleration(0), 0.2, 1e-15);
  EXPECT_NEAR(formulas::two_star_acceleration(M_PI / 2), 2.0 / 15, 1e-15);
  EXPECT_NEAR(formulas::coherent_acceleration(Spin(2)), 0.2, 1e-15);
}
