#include <gtest/gtest.h>

#include <random>

#include "cuboid/cuboid_polys.hpp"
#include "cuboid/error.hpp"
#include "cuboid/linear_factor.hpp"

using namespace cuboid;

TEST(IntegerRoots, Examples) {
  EXPECT_TRUE(integer_roots(build_p_au(1, 2)).empty());
  EXPECT_EQ(integer_roots(build_p_au(3, 3)), (RootSet{-3, 3}));
  EXPECT_EQ(integer_roots(IntPoly{-1, 0, 1}), (RootSet{-1, 1}));
  // Not even: (t - 2)(t + 3)(t - 5)
  EXPECT_EQ(integer_roots(IntPoly{-2, 1} * IntPoly{3, 1} * IntPoly{-5, 1}), (RootSet{-3, 2, 5}));
}

TEST(IntegerRoots, Errors) {
  try {
    (void)integer_roots(IntPoly{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMonic);
  }
  try {
    (void)integer_roots(IntPoly{0, -1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroConstantTerm);
  }
}

// Exhaustive scan over |t| <= 1 + max|c_i| agrees with the divisor search.
TEST(IntegerRoots, MatchesExhaustiveScan) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> deg(1, 6), root(-9, 9), coeff(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p{1};
    const int k = deg(rng);
    for (int i = 0; i < k; ++i) {
      if (trial % 2 == 0) {
        p = p * IntPoly{-root(rng), 1};
      } else {
        p = p * IntPoly{coeff(rng), coeff(rng), 1};
      }
    }
    if (p.coeff(0) == 0) continue;
    BigInt bound = 0;
    for (const auto& c : p.coeffs()) bound = std::max(bound, BigInt(abs(c)));
    RootSet scanned;
    for (BigInt t = -bound - 1; t <= bound + 1; ++t)
      if (eval(p, t) == 0) scanned.insert(t);
    ASSERT_EQ(integer_roots(p), scanned) << p;
  }
}

TEST(LinearFactor, BuildB4) {
  EXPECT_EQ(build_b4(0, 1, 1), (IntPoly{-1, 0, 0, 0, 1}));
  EXPECT_EQ(build_b4(5, 1, 2), (IntPoly{-4, 0, 5, 0, 1}));
  for (long b2 = -20; b2 <= 20; b2 += 7) EXPECT_TRUE(check_parity(build_b4(b2, 3, 4)));
}

TEST(LinearFactor, ExpandProduct) {
  EXPECT_EQ(expand_product(3, 3, 0, 3, 3), build_p_au(3, 3));
  const IntPoly e = expand_product(2, 5, -7, 3, 4);
  EXPECT_EQ(e.coeff(6), BigInt(-7 + 25 - 4));
  EXPECT_EQ(e.coeff(0), pow(BigInt(12), 4));
}

TEST(LinearFactor, SolveSystemExamples) {
  EXPECT_TRUE(solve_linear_factor_system(1, 2).empty());
  EXPECT_EQ(solve_linear_factor_system(3, 3),
            (std::vector<LinearFactorSolution>{{-3, 0, -3}, {3, 0, 3}}));
  EXPECT_TRUE(solve_linear_factor_system(5, 7).empty());
  try {
    (void)solve_linear_factor_system(0, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroParameter);
  }
}

// (a, u) = (5, 7): with A0 C0 = 35 the candidates are A0 in +-{1, 5, 7, 35};
// check each by hand arithmetic.
TEST(LinearFactor, DivisorEnumerationByHand) {
  const long diff = 49 - 25;
  int solutions = 0;
  for (long a0 : {1L, 5L, 7L, 35L, -1L, -5L, -7L, -35L}) {
    const long c0 = 35 / a0;
    const long d = c0 * c0 - a0 * a0;
    const long b2 = 6 * diff - d;
    if (d * b2 == diff * diff) ++solutions;
  }
  EXPECT_EQ(solutions, 0);
}

TEST(LinearFactor, OraclesAgreeOnSmallParameters) {
  for (long a = 1; a <= 40; ++a)
    for (long u = 1; u <= 40; ++u) {
      const bool has_root = !integer_roots(build_p_au(a, u)).empty();
      const bool solvable = !solve_linear_factor_system(a, u).empty();
      ASSERT_EQ(has_root, solvable) << a << "," << u;
      ASSERT_EQ(has_root, a == u) << a << "," << u;
    }
}

TEST(LinearFactor, SolutionsReproducePolynomial) {
  for (long a = -12; a <= 12; ++a)
    for (long u = -12; u <= 12; ++u) {
      if (a == 0 || u == 0) continue;
      const IntPoly p = build_p_au(a, u);
      for (const auto& s : solve_linear_factor_system(a, u)) {
        ASSERT_EQ(expand_product(s.a0, s.c0, s.b2, a, u), p);
        ASSERT_TRUE(divide_exact(p, IntPoly{-s.a0, 1}).has_value());
      }
    }
}

// Squaring the first equation and subtracting 36 times the second:
// (B2 + D)^2 - 36 D B2 = 36 ((u^2 - a^2)^2 - D B2) whenever B2 + D = 6(u^2-a^2).
TEST(LinearFactor, EliminatedQuadraticIdentity) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> small(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    const BigInt a = small(rng), u = small(rng), a0 = small(rng), c0 = small(rng);
    const BigInt d = c0 * c0 - a0 * a0;
    const BigInt diff = u * u - a * a;
    const BigInt b2 = 6 * diff - d;
    const BigInt q = eliminated_quadratic(b2, d);
    ASSERT_EQ(q, 36 * (diff * diff - d * b2));
    ASSERT_EQ(q == 0, d * b2 == diff * diff);
  }
  for (long a = 1; a <= 10; ++a)
    for (const auto& s : solve_linear_factor_system(a, a))
      EXPECT_EQ(eliminated_quadratic(s.b2, s.c0 * s.c0 - s.a0 * s.a0), 0);
}

TEST(LinearFactor, DiscriminantAnalysis) {
  const auto zero = quadratic_discriminant_analysis(0);
  EXPECT_TRUE(zero.solvable);
  EXPECT_EQ(zero.b2, std::vector<BigInt>{0});
  EXPECT_FALSE(quadratic_discriminant_analysis(1).solvable);
  EXPECT_FALSE(quadratic_discriminant_analysis(-6).solvable);
  EXPECT_FALSE(is_perfect_square(BigInt(41472)));
  for (long d = -10000; d <= 10000; ++d)
    if (d != 0) ASSERT_FALSE(quadratic_discriminant_analysis(d).solvable) << d;
}

TEST(LinearFactor, VerifyNoLinearFactor) {
  EXPECT_TRUE(verify_no_linear_factor(1, 2));
  EXPECT_TRUE(verify_no_linear_factor(2, 3));
  EXPECT_TRUE(verify_no_linear_factor(4, 6));
  auto code_of = [](long a, long u) {
    try {
      (void)verify_no_linear_factor(a, u);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code_of(0, 2), Errc::ZeroParameter);
  EXPECT_EQ(code_of(3, 3), Errc::EqualParameters);
  EXPECT_EQ(code_of(-1, 2), Errc::NonPositiveParameter);
}
