#include <gtest/gtest.h>

#include "hermlie/lie_algebra.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/notation.hpp"
#include "hermlie/random.hpp"
#include "support.hpp"

using namespace hermlie;

TEST(Scalar, RationalParsing) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("x"), std::exception);
}

TEST(Scalar, FloatZeroUsesEpsilon) {
  const double saved = epsilon();
  EXPECT_TRUE(is_zero(1e-12));
  EXPECT_FALSE(is_zero(1e-6));
  epsilon() = 1e-3;
  EXPECT_TRUE(is_zero(1e-6));
  epsilon() = saved;
  EXPECT_TRUE(is_zero(Rational(0)));
  EXPECT_FALSE(is_zero(Rational(1, 1000000000)));
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.small(4) / Rational(1 + rng.uniform(0, 2));
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Linalg, InverseAndNullspace) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.small(3);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    EXPECT_EQ(m * inverse(m), Matrix<Rational>::identity(n));
  }
  // rank-1 matrix: nullspace of dimension 2, every basis vector is killed
  const auto r1 = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}});
  EXPECT_EQ(rank(r1), 1);
  const auto ns = nullspace(r1);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero_vector(r1 * v));
}

TEST(Linalg, PositiveDefinite) {
  EXPECT_TRUE(is_positive_definite(Matrix<Rational>::from_rows({{2, 1}, {1, 2}})));
  EXPECT_FALSE(is_positive_definite(Matrix<Rational>::from_rows({{1, 2}, {2, 1}})));
  EXPECT_FALSE(is_positive_definite(Matrix<Rational>::from_rows({{0, 0}, {0, 1}})));
  // Sylvester's criterion as the oracle
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix<Rational> a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a(i, j) = a(j, i) = rng.small(3);
    bool sylvester = true;
    for (int k = 1; k <= 3; ++k) {
      Matrix<Rational> minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = a(i, j);
      sylvester = sylvester && oracle::leibniz_det(minor) > 0;
    }
    EXPECT_EQ(is_positive_definite(a), sylvester);
  }
}

TEST(LieAlgebra, HeisenbergBasics) {
  const auto L = parse_notation("(0,0,0,12)");
  EXPECT_EQ(L.c(0, 1, 3), -1);
  EXPECT_EQ(L.c(1, 0, 3), 1);
  EXPECT_EQ(jacobi_defect(L), 0);
  EXPECT_TRUE(is_unimodular(L));
  EXPECT_EQ(center(L).dim(), 2);
  EXPECT_EQ(derived_algebra(L).dim(), 1);
  EXPECT_EQ(nilpotency_step(L), 2);
  EXPECT_TRUE(is_two_step(L));
}

TEST(LieAlgebra, Sl2IsNotSolvableNorNilpotent) {
  // [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1
  std::vector<Rational> c(27);
  auto set = [&](int i, int j, int k, int v) {
    c[(i * 3 + j) * 3 + k] = v;
    c[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  const auto L = LieAlgebra<Rational>::from_constants(3, c);
  EXPECT_TRUE(is_unimodular(L));
  EXPECT_EQ(center(L).dim(), 0);
  EXPECT_EQ(derived_algebra(L).dim(), 3);
  EXPECT_FALSE(nilpotency_step(L).has_value());
}

TEST(LieAlgebra, JacobiViolationIsRejected) {
  std::vector<Rational> c(27);
  auto set = [&](int i, int j, int k, int v) {
    c[(i * 3 + j) * 3 + k] = v;
    c[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 2, 1);  // [e1,e2] = e3
  set(1, 2, 0, 1);  // [e2,e3] = e1
  set(0, 2, 0, 1);  // [e1,e3] = e1  -> Jacobi fails
  try {
    LieAlgebra<Rational>::from_constants(3, c);
    FAIL() << "expected JacobiError";
  } catch (const JacobiError& e) {
    EXPECT_FALSE(e.defect().empty());
  }
}

TEST(LieAlgebra, AdIsARepresentation) {
  // ad_[X,Y] = ad_X ad_Y - ad_Y ad_X is equivalent to Jacobi
  Rng rng(9);
  for (const char* text : {"(0,0,0,12)", "(0,0,12,13)", "(0,-12,13,0)", "(-23,-212,213,0)", "(0,0,-13+24,-14-23)"}) {
    const auto L = parse_notation(text);
    const int n = L.dim();
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = oracle::random_vector(n, rng), y = oracle::random_vector(n, rng);
      const auto lhs = ad_matrix(L, bracket(L, x, y));
      const auto ax = ad_matrix(L, x), ay = ad_matrix(L, y);
      EXPECT_EQ(lhs, ax * ay - ay * ax) << text;
    }
  }
}

TEST(LieAlgebra, LowerCentralSeriesOfFiliform) {
  const auto L = parse_notation("(0,0,12,13,14)");
  EXPECT_EQ(lower_central_series(L), (std::vector<int>{5, 3, 2, 1, 0}));
  EXPECT_EQ(nilpotency_step(L), 4);
  EXPECT_FALSE(is_two_step(L));
  EXPECT_TRUE(is_abelian(LieAlgebra<Rational>::abelian(4)));
  EXPECT_EQ(nilpotency_step(LieAlgebra<Rational>::abelian(4)), 1);
}

TEST(LieAlgebra, UnimodularityIsTraceOfAd) {
  const auto aff = parse_notation("(0,-12,0,-34)");
  EXPECT_FALSE(is_unimodular(aff));
  const auto t = ad_traces(aff);
  // [e1,e2] = e2 so tr ad_{e1} = 1, and likewise for e3
  EXPECT_EQ(t, (Vector<Rational>{1, 0, 1, 0}));
}

TEST(Generators, TwoStepInstancesAreValid) {
  for (int n : {4, 6, 8})
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto L = random_two_step(n, s);
      EXPECT_EQ(jacobi_defect(L), 0);
      EXPECT_TRUE(is_two_step(L) || is_abelian(L));
      EXPECT_TRUE(is_unimodular(L));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const auto& c = L.c(i, j, k);
            EXPECT_TRUE(c >= -3 && c <= 3);
          }
    }
}

TEST(Generators, ThreeStepAndDeterminism) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto L = random_three_step(6, s);
    EXPECT_EQ(nilpotency_step(L), 3);
    EXPECT_EQ(L, random_three_step(6, s));
  }
  EXPECT_EQ(random_two_step(6, 42), random_two_step(6, 42));
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
}
