#include <gtest/gtest.h>

#include "higherk/linalg.hpp"
#include "higherk/polynomial.hpp"

using namespace higherk;

TEST(Kernel, IdentityHasNoKernel) { EXPECT_EQ(kernel_basis(RationalMatrix::identity(2)).cols(), 0u); }

TEST(Kernel, ZeroOneByOne) {
  auto k = kernel_basis(RationalMatrix(1, 1));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_NE(k(0, 0), 0);
}

TEST(Kernel, RankOneTwoByTwo) {
  RationalMatrix m{{1, 2}, {2, 4}};
  auto k = kernel_basis(m);
  ASSERT_EQ(k.cols(), 1u);
  // proportional to (-2, 1)
  EXPECT_EQ(k(0, 0), -2 * k(1, 0));
  EXPECT_NE(k(1, 0), 0);
  EXPECT_EQ(rank(m), 1u);
}

TEST(Solve, Identity) {
  RationalVector b = {Rational(3, 4), Rational(-5)};
  auto x = solve(RationalMatrix::identity(2), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, Underdetermined) {
  RationalMatrix a{{1, 1}};
  RationalVector b = {Rational(2)};
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], 2);
}

TEST(Solve, Inconsistent) {
  RationalVector b = {Rational(1)};
  EXPECT_FALSE(solve(RationalMatrix(1, 1), b));
}

TEST(Determinant, RationalAndInteger) {
  RationalMatrix r{{Rational(1, 2), 1}, {3, 4}};
  EXPECT_EQ(determinant(r), Rational(-1));
  IntegerMatrix z{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  EXPECT_EQ(determinant(z), Integer(2 * (3 - 2) - 0 + 1 * (1 - 3)));
  EXPECT_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}));
}

TEST(Smith, DiagTwoThree) {
  IntegerMatrix a{{2, 0}, {0, 3}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.invariant_factors(), (IntegerVector{1, 6}));
  EXPECT_EQ(s.u * a * s.v, s.diagonal);
}

TEST(Smith, ZeroAndIdentity) {
  EXPECT_TRUE(smith_normal_form(IntegerMatrix(2, 3)).diagonal.is_zero());
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)).diagonal, IntegerMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntegerMatrix(2, 3)).rank(), 0u);
}

TEST(Smith, EmptyMatrix) {
  auto s = smith_normal_form(IntegerMatrix(3, 0));
  EXPECT_EQ(s.rank(), 0u);
  EXPECT_EQ(s.u.rows(), 3u);
}

TEST(Lattice, Membership) {
  IntegerVector v = {5, -7};
  EXPECT_TRUE(lattice_membership(IntegerMatrix::identity(2), v));
  IntegerVector one = {1};
  EXPECT_FALSE(lattice_membership(IntegerMatrix{{2}}, one));
  IntegerVector w = {2, 3};
  EXPECT_TRUE(lattice_membership(IntegerMatrix{{2, 0}, {0, 3}}, w));
  IntegerVector u = {1, 3};
  EXPECT_FALSE(lattice_membership(IntegerMatrix{{2, 0}, {0, 3}}, u));
}

TEST(Polynomial, SquarefreeOfRepeatedRoot) {
  // (t - 1)^2 (t + 2)
  Polynomial p = power(Polynomial::linear(1), 2) * Polynomial::linear(-2);
  auto f = squarefree_decomposition(p);
  ASSERT_GE(f.size(), 2u);
  EXPECT_EQ(f[0], Polynomial::linear(-2));
  EXPECT_EQ(f[1], Polynomial::linear(1));
}

TEST(Polynomial, CharacteristicPolynomialAnnihilates) {
  RationalMatrix m{{2, 1, 0}, {0, 2, 0}, {1, 0, -1}};
  auto chi = characteristic_polynomial(m);
  EXPECT_EQ(chi.degree(), 3);
  EXPECT_TRUE(chi.evaluate(m).is_zero());
  EXPECT_EQ(chi.evaluate(Rational(2)), 0);
}
