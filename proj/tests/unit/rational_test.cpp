#include <gtest/gtest.h>

#include "fcov/rational.hpp"

using fcov::Rational;

TEST(Rational, NormalizesSignAndTerms) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1) - Rational(11, 16), Rational(5, 16));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  Rational acc;
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  EXPECT_EQ(acc, Rational(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_LE(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, Rendering) {
  EXPECT_EQ(Rational(5, 16).fraction(), "5/16");
  EXPECT_EQ(Rational(5, 16).decimal(), "0.3125");
  EXPECT_EQ(Rational(2, 3).decimal(), "0.666667");
  EXPECT_EQ(Rational(1, 3).decimal(), "0.333333");
  EXPECT_EQ(Rational(-2, 3).decimal(), "-0.666667");
  EXPECT_EQ(Rational(1, 2000000).decimal(), "0.000001");
  EXPECT_EQ(Rational(1, 3000000).decimal(), "0");
  EXPECT_EQ(Rational(7).fraction(), "7");
  EXPECT_EQ(Rational(3, 2).decimal(2), "1.5");
}

TEST(Rational, WideIntermediates) {
  const std::int64_t big = 3'000'000'000'000LL;
  EXPECT_EQ(Rational(big, big + 1) * Rational(big + 1, big), Rational(1));
}
