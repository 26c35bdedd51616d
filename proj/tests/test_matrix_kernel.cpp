#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

using namespace spinkin;

TEST(Kron, IdentityAndPauli) {
  EXPECT_LT(oracle::max_abs(kron(identity(2), identity(2)) - identity(4)), 1e-15);
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want.diagonal() << 1, 1, -1, -1;
  EXPECT_LT(oracle::max_abs(kron(pauli::z(), identity(2)) - want), 1e-15);
}

TEST(Kron, TraceFactorizesAndAssociates) {
  const ComplexMatrix a = oracle::random_matrix(2, 2, 1), b = oracle::random_matrix(2, 2, 2),
                      c = oracle::random_matrix(3, 3, 3);
  EXPECT_LT(std::abs(kron(a, b).trace() - a.trace() * b.trace()), 1e-12);
  EXPECT_LT(oracle::max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))), 1e-12);
}

TEST(Vec, RowMajorAndSandwich) {
  const ComplexVector v = vec(identity(2));
  EXPECT_EQ(v(0), Complex(1));
  EXPECT_EQ(v(1), Complex(0));
  EXPECT_EQ(v(2), Complex(0));
  EXPECT_EQ(v(3), Complex(1));
  const ComplexMatrix a = oracle::random_matrix(3, 3, 4), b = oracle::random_matrix(3, 3, 5),
                      c = oracle::random_matrix(3, 3, 6);
  EXPECT_LT((kron(a, b.transpose()) * vec(c) - vec(a * c * b)).cwiseAbs().maxCoeff(), 1e-12);
  const ComplexMatrix d = oracle::random_matrix(4, 4, 7);
  EXPECT_EQ(unvec(vec(d)), d);
}

TEST(Vec, RejectsNonSquare) {
  EXPECT_THROW(vec(ComplexMatrix::Zero(2, 3)), InvalidInput);
  EXPECT_THROW(unvec(ComplexVector::Zero(5)), InvalidInput);
}

TEST(Eigh, SpectraAndReconstruction) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const auto e = eigh(d);
  EXPECT_NEAR(e.values(0), 1, 1e-14);
  EXPECT_NEAR(e.values(1), 2, 1e-14);
  EXPECT_NEAR(e.values(2), 3, 1e-14);
  const auto x = eigh(pauli::x());
  EXPECT_NEAR(x.values(0), -1, 1e-14);
  EXPECT_NEAR(x.values(1), 1, 1e-14);

  const ComplexMatrix h = oracle::random_hermitian(6, 8);
  const auto es = eigh(h);
  const ComplexMatrix rec = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
  EXPECT_LT(oracle::max_abs(h - rec), 1e-10);
  EXPECT_LT(oracle::max_abs(es.vectors.adjoint() * es.vectors - identity(6)), 1e-10);
  EXPECT_NEAR(es.values.sum(), h.trace().real(), 1e-10);
  EXPECT_NEAR(es.values.prod(), h.determinant().real(), 1e-8 * std::abs(h.determinant()));
}

TEST(Eigh, RejectsNonHermitian) { EXPECT_THROW(eigh(oracle::random_matrix(3, 3, 9)), InvalidInput); }

TEST(PartialTrace, BellAndProducts) {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1 / std::sqrt(2.0);
  const ComplexMatrix rho = projector(bell);
  EXPECT_LT(oracle::max_abs(partial_trace(rho, 2, 2, Subsystem::first) - 0.5 * identity(2)), 1e-15);
  EXPECT_LT(oracle::max_abs(partial_trace(rho, 2, 2, Subsystem::second) - 0.5 * identity(2)), 1e-15);

  const ComplexMatrix a = oracle::random_matrix(2, 2, 10), b = oracle::random_matrix(3, 3, 11);
  EXPECT_LT(oracle::max_abs(partial_trace(kron(a, b), 2, 3, Subsystem::first) - a * b.trace()), 1e-12);
  EXPECT_LT(oracle::max_abs(partial_trace(kron(a, b), 2, 3, Subsystem::second) - b * a.trace()), 1e-12);
}

TEST(PartialTrace, ReducedMixedFamily) {
  SymmetricMixedParams p;
  p.n = Eigen::Vector3d(0.05, -0.1, 0.2);
  const ComplexMatrix r1 = partial_trace(build_mixed_matrix(p), 2, 2, Subsystem::first);
  ComplexMatrix want = 0.5 * identity(2);
  for (int a = 0; a < 3; ++a) want += p.n(a) * pauli::axis(a);
  EXPECT_LT(oracle::max_abs(r1 - want), 1e-15);
}

TEST(PartialTrace, DimensionMismatch) {
  EXPECT_THROW(partial_trace(identity(4), 2, 3, Subsystem::first), InvalidInput);
  EXPECT_THROW(partial_transpose(identity(5), 2, 2, Subsystem::first), InvalidInput);
}

TEST(PartialTranspose, Involution) {
  const ComplexMatrix m = oracle::random_matrix(6, 6, 12);
  for (auto w : {Subsystem::first, Subsystem::second})
    EXPECT_LT(oracle::max_abs(partial_transpose(partial_transpose(m, 2, 3, w), 2, 3, w) - m), 1e-15);
  const ComplexMatrix a = oracle::random_matrix(2, 2, 13), b = oracle::random_matrix(3, 3, 14);
  EXPECT_LT(oracle::max_abs(partial_transpose(kron(a, b), 2, 3, Subsystem::first) - kron(a.transpose(), b)),
            1e-14);
}

TEST(HsInner, PauliOrthonormality) {
  EXPECT_NEAR(std::abs(hs_inner(identity(2), identity(2)) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(hs_inner(pauli::x(), pauli::y())), 0, 1e-15);
  EXPECT_NEAR(std::abs(hs_inner(pauli::x(), pauli::x()) - 1.0), 0, 1e-15);
  const ComplexMatrix a = oracle::random_matrix(3, 3, 15), b = oracle::random_matrix(3, 3, 16);
  EXPECT_NEAR(hs_metric(a, b), 2 * hs_inner(a, b).real(), 1e-12);
  EXPECT_THROW(hs_inner(identity(2), identity(3)), InvalidInput);
}
