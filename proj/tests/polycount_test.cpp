#include <random>

#include <gtest/gtest.h>

#include "activity/errors.hpp"
#include "activity/polycount.hpp"

using namespace activity;

namespace {

IntPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5), coef(-9, 9);
  std::vector<BigInt> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(coef(rng));
  return IntPolynomial(c);
}

}  // namespace

TEST(IntPolynomial, CanonicalForm) {
  EXPECT_TRUE(IntPolynomial({0, 0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(IntPolynomial({1, 2, 0}), IntPolynomial({1, 2}));
  EXPECT_EQ(IntPolynomial({4, 6, 3, 1}).coeff(7), 0);
}

TEST(IntPolynomial, ToString) {
  EXPECT_EQ(IntPolynomial({4, 6, 3, 1}).to_string(), "x^3 + 3x^2 + 6x + 4");
  EXPECT_EQ(IntPolynomial({0, -1, 0, -1}).to_string(), "-x^3 - x");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ(IntPolynomial({-5}).to_string(), "-5");
}

TEST(IntPolynomial, RingLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p - p, IntPolynomial());
    EXPECT_EQ(-(-p), p);
    for (int x = -3; x <= 3; ++x) {
      EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
      EXPECT_EQ(p.compose(q).evaluate(x), p.evaluate(q.evaluate(x)));
    }
  }
}

TEST(IntPolynomial, PowAndDivide) {
  const auto x1 = IntPolynomial::linear(1);
  EXPECT_EQ(x1.pow(3), IntPolynomial({1, 3, 3, 1}));
  EXPECT_EQ(x1.pow(0), IntPolynomial({1}));
  EXPECT_EQ(IntPolynomial({0, 0, 2, 5}).divide_by_x_power(2), IntPolynomial({2, 5}));
  EXPECT_THROW(IntPolynomial({1, 1}).divide_by_x_power(1), DomainError);
  EXPECT_EQ(IntPolynomial::monomial(3, 2), IntPolynomial({0, 0, 3}));
}

TEST(IntPolynomial, BigCoefficients) {
  const auto p = IntPolynomial::linear(1).pow(80);
  EXPECT_EQ(p.coeff(40).str(), "107507208733336176461620");
  EXPECT_EQ(p.evaluate(1), BigInt(1) << 80);
}

TEST(ActivityVector, Basics) {
  const ActivityVector a{1, 0, 2, 1, 0};
  EXPECT_EQ(a.to_string(), "(1,0,2,1,0)");
  EXPECT_EQ(a.sum(), 4);
  EXPECT_TRUE(a.all_nonnegative());
  EXPECT_FALSE((ActivityVector{-1, 2, 1}).all_nonnegative());
  EXPECT_EQ(ActivityVector{}.to_string(), "()");
}

TEST(Counting, BinomialAndFactorial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20).str(), "2432902008176640000");
  for (unsigned n = 1; n < 12; ++n) {
    for (unsigned k = 1; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Counting, StirlingFirstKind) {
  EXPECT_EQ(stirling_first_unsigned(0, 0), 1);
  EXPECT_EQ(stirling_first_unsigned(4, 2), 11);
  EXPECT_EQ(stirling_first_unsigned(5, 0), 0);
  for (unsigned n = 1; n < 10; ++n) {
    BigInt row = 0;
    for (unsigned k = 0; k <= n; ++k) row += stirling_first_unsigned(n, k);
    EXPECT_EQ(row, factorial(n));
  }
}

TEST(Counting, RisingFactorialShifted) {
  EXPECT_EQ(rising_factorial_shifted(1), IntPolynomial({1}));
  EXPECT_EQ(rising_factorial_shifted(3), IntPolynomial({0, 1, 1}));
  EXPECT_EQ(rising_factorial_shifted(4), IntPolynomial({0, 2, 3, 1}));
  EXPECT_THROW(rising_factorial_shifted(0), DomainError);
  // Coefficients are c(n-1, k).
  for (int n = 2; n < 9; ++n) {
    const auto p = rising_factorial_shifted(n);
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(p.coeff(static_cast<std::size_t>(k)),
                stirling_first_unsigned(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)));
    }
  }
}

TEST(Counting, BoundedFormula) {
  EXPECT_EQ(athanasiadis_bounded(1), 1);
  EXPECT_EQ(athanasiadis_bounded(3), 1);
  EXPECT_EQ(athanasiadis_bounded(4), 4);
  EXPECT_EQ(athanasiadis_bounded(5), 26);
  EXPECT_EQ(athanasiadis_bounded(6), 212);
}

TEST(Counting, ActivityPolyFromVector) {
  EXPECT_EQ(activity_poly_from_vector({1, 0, 2, 1, 0}), IntPolynomial({1, 0, 2, 1}));
  EXPECT_THROW(activity_poly_from_vector({-1, 2, 1}), DomainError);
}
