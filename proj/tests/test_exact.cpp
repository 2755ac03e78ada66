#include "hvf/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>

using hvf::QuadraticSurd;
using hvf::Rational;

TEST(SquarefreeSplit, Basics) {
  EXPECT_EQ(hvf::squarefree_split(72), std::make_pair(hvf::BigInt(6), std::int64_t{2}));
  EXPECT_EQ(hvf::squarefree_split(73), std::make_pair(hvf::BigInt(1), std::int64_t{73}));
  EXPECT_EQ(hvf::squarefree_split(49), std::make_pair(hvf::BigInt(7), std::int64_t{1}));
}

TEST(QuadraticSurd, ParseAndPrint) {
  EXPECT_EQ(QuadraticSurd::parse("(sqrt(73) - 13)/8").to_string(), "(-13 + sqrt(73))/8");
  EXPECT_EQ(QuadraticSurd::parse("sqrt(8)").to_string(), "2*sqrt(2)");
  EXPECT_EQ(QuadraticSurd::parse("0.6").to_string(), "3/5");
  EXPECT_EQ(QuadraticSurd::parse("sqrt(1/2)").to_string(), "sqrt(2)/2");
  EXPECT_EQ(QuadraticSurd::parse("1/sqrt(3) - 1").to_string(), "(-3 + sqrt(3))/3");
  EXPECT_EQ(QuadraticSurd::parse("sqrt(49)").to_string(), "7");
  EXPECT_THROW(QuadraticSurd::parse("sqrt(2) + sqrt(3)"), hvf::RadicandMismatch);
  EXPECT_THROW(QuadraticSurd::parse("2 +"), std::invalid_argument);
  EXPECT_THROW(QuadraticSurd::parse("sqrt(-1)"), std::invalid_argument);
}

TEST(QuadraticSurd, FieldArithmetic) {
  const QuadraticSurd x = QuadraticSurd::parse("1 + sqrt(2)");
  const QuadraticSurd inv = QuadraticSurd(1) / x;
  EXPECT_EQ(inv, QuadraticSurd::parse("sqrt(2) - 1"));
  EXPECT_EQ(x * x, QuadraticSurd::parse("3 + 2*sqrt(2)"));
  EXPECT_EQ(x - x, QuadraticSurd(0));
  EXPECT_THROW(x / QuadraticSurd(0), std::domain_error);
}

TEST(QuadraticSurd, SignUnderCancellation) {
  // 19601 - 13860 sqrt(2) = (sqrt(2) - 1)^12 > 0 is tiny.
  const QuadraticSurd tiny = QuadraticSurd::parse("19601 - 13860*sqrt(2)");
  EXPECT_EQ(tiny.sign(), 1);
  EXPECT_NEAR(tiny.to_double() / std::pow(std::sqrt(2.0) - 1.0, 12), 1.0, 1e-9);
  EXPECT_EQ((-tiny).sign(), -1);
  EXPECT_TRUE(-tiny < tiny);
}

TEST(SolveQuadraticExact, TwistEquationS4) {
  // 2u^2 + 7u - 3 = 0.
  const auto roots = hvf::solve_quadratic_exact(2, 7, -3);
  ASSERT_TRUE(roots.real);
  EXPECT_EQ(roots.second, QuadraticSurd::parse("(sqrt(73) - 7)/4"));
  EXPECT_EQ(roots.first, QuadraticSurd::parse("(-sqrt(73) - 7)/4"));
}

TEST(SolveQuadraticExact, LinearAndComplex) {
  const auto lin = hvf::solve_quadratic_exact(0, 2, -3);
  EXPECT_EQ(lin.first, QuadraticSurd(Rational(3, 2)));
  EXPECT_FALSE(hvf::solve_quadratic_exact(1, 0, 1).real);
  EXPECT_THROW(hvf::solve_quadratic_exact(0, 0, 1), std::domain_error);
}

TEST(SolveQuadraticExact, RationalRoots) {
  const auto r = hvf::solve_quadratic_exact(1, -5, 6);
  EXPECT_TRUE(r.first.is_rational());
  EXPECT_EQ(r.first * r.second, QuadraticSurd(6));
  EXPECT_EQ(r.first + r.second, QuadraticSurd(5));
}
