#include <gtest/gtest.h>

#include "crgs/error.hpp"
#include "crgs/rational.hpp"

namespace crgs {
namespace {

TEST(Rational, NormalizesToLowestTerms) {
  const Rational r(6, 8);
  EXPECT_EQ(r.num(), 3u);
  EXPECT_EQ(r.den(), 4u);
  EXPECT_EQ(Rational(0, 5), Rational(0, 1));
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::parse("0.2"), Rational(1, 5));
  EXPECT_EQ(Rational::parse("1"), Rational(1, 1));
  EXPECT_EQ(Rational::parse(".25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("0.30"), Rational(3, 10));
  EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", ".", "-0.2", "0.2.1", "abc", "1/0", "1e-3", " 0.2"}) {
    EXPECT_FALSE(Rational::parse(bad).has_value()) << bad;
  }
}

TEST(Rational, ComparesByCrossMultiplication) {
  EXPECT_LT(Rational(1, 5), Rational(1, 4));
  EXPECT_EQ(Rational(2, 10) <=> Rational(1, 5), std::strong_ordering::equal);
  EXPECT_GT(Rational(2, 7), Rational(1, 5));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 4) + Rational(1, 5), Rational(9, 20));
  EXPECT_EQ(Rational(1, 4) - Rational(1, 5), Rational(1, 20));
  EXPECT_THROW((void)(Rational(1, 5) - Rational(1, 4)), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, OneMinusRatio) {
  EXPECT_EQ(one_minus_ratio(3, 4), Rational(1, 4));
  EXPECT_EQ(one_minus_ratio(60, 100), Rational(2, 5));
  EXPECT_EQ(one_minus_ratio(7, 7), Rational(0, 1));
  EXPECT_THROW(one_minus_ratio(5, 4), Error);
  EXPECT_THROW(one_minus_ratio(0, 0), Error);
}

TEST(CoverBound, InfinityExceedsEveryThreshold) {
  EXPECT_TRUE(CoverBound::infinity().exceeds(Rational(1, 1)));
  EXPECT_TRUE(CoverBound::finite(Rational(3, 4)).exceeds(Rational(3, 10)));
  EXPECT_FALSE(CoverBound::finite(Rational(1, 5)).exceeds(Rational(1, 5)));
  EXPECT_EQ(CoverBound::infinity().to_string(), "inf");
}

}  // namespace
}  // namespace crgs
