#include <gtest/gtest.h>

#include "gcx/complex.hpp"
#include "gcx/errors.hpp"
#include "gcx/polynomial.hpp"

using namespace gcx;

TEST(Polynomial, Arithmetic) {
  RationalPoly p({1, 2}), q({0, 1});
  EXPECT_EQ(p * q, RationalPoly({0, 1, 2}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(2));
  EXPECT_EQ(RationalPoly({0, 0, 3}).derivative(), RationalPoly({0, 6}));
  EXPECT_EQ(RationalPoly({1}).integrate(-1, 0), Rational(1));
  EXPECT_EQ(RationalPoly({0, 1}).integrate(-1, 0), Rational(-1, 2));
  EXPECT_EQ(RationalPoly({Rational(1, 2), -3}).toJson(), "[\"1/2\",\"-3/1\"]");
}

TEST(Polynomial, FractionStrings) {
  EXPECT_EQ(toFractionString(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(toFractionString(Rational(3)), "3/1");
  EXPECT_EQ(parseFraction("6/-4"), Rational(-3, 2));
  EXPECT_THROW(parseFraction("1/0"), InvalidArgument);
}

TEST(Polynomial, GeneratingFunctionsAreJacobsthal) {
  for (int n = 4; n <= 20; ++n) {
    EXPECT_EQ(generatingFunction(dualCycleComplex(n)), jacobsthalCycle(n)) << n;
    EXPECT_EQ(generatingFunction(dualPathComplex(n)), jacobsthalPath(n)) << n;
  }
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(jacobsthalCycle(n).evaluate(1) - 1, Rational(hyperFibonacci(n)));
}

TEST(Polynomial, ClosedForm) {
  EXPECT_EQ(jacobsthalCycleClosedForm(2), RationalPoly({1, 2}));
  for (int n = 1; n <= 25; ++n) EXPECT_EQ(jacobsthalCycleClosedForm(n), jacobsthalCycle(n)) << n;
}

TEST(Polynomial, DerivativeAtOne) {
  // f'(1) of G_n equals n F(n-1) with F(1) = F(2) = 1
  std::int64_t a = 1, b = 1;  // F(1), F(2)
  for (int n = 3; n <= 20; ++n) {
    std::int64_t fib = b;  // F(n-1)
    if (n >= 4) EXPECT_EQ(jacobsthalCycle(n).derivative().evaluate(1), Rational(n * fib)) << n;
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
}
