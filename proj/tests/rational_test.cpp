#include <gtest/gtest.h>

#include "inthull/error.hpp"
#include "inthull/rational.hpp"

using namespace inthull;

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor(make_rational(-1, 5)), -1);
  EXPECT_EQ(ceil(make_rational(-1, 5)), 0);
  EXPECT_EQ(floor(make_rational(39, 10)), 3);
  EXPECT_EQ(ceil(make_rational(39, 10)), 4);
  EXPECT_EQ(floor(Rational(-3)), -3);
  EXPECT_EQ(ceil(Rational(-3)), -3);
}

TEST(Rational, MakeReduces) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::exception);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-1/5"), make_rational(-1, 5));
  EXPECT_EQ(parse_rational("+17/10"), make_rational(17, 10));
  EXPECT_EQ(parse_rational("42"), Rational(42));
  EXPECT_EQ(parse_rational("4/8"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(Rational, ParseRejectsDecimalsAndJunk) {
  for (const char* bad : {"-0.2", "1e3", "", "1/0", "/3", "3/", "1 /2", " 1", "0x10", "1/-2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, DecimalRenderingIsExact) {
  EXPECT_EQ(to_decimal(make_rational(41, 4), 2), "10.25");
  EXPECT_EQ(to_decimal(make_rational(2, 3), 2), "0.67");
  EXPECT_EQ(to_decimal(make_rational(-2, 3), 2), "-0.67");
  EXPECT_EQ(to_decimal(make_rational(1, 8), 2), "0.13");
  EXPECT_EQ(to_decimal(Rational(7), 0), "7");
}

TEST(Rational, GcdAndLcm) {
  EXPECT_EQ(gcd(Integer(12), Integer(-18)), 6);
  EXPECT_EQ(gcd(Integer(0), Integer(7)), 7);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
}

TEST(Rational, Int64Range) {
  EXPECT_TRUE(fits_int64(Integer("9223372036854775807")));
  EXPECT_FALSE(fits_int64(Integer("9223372036854775808")));
  EXPECT_EQ(to_int64(Integer(-5)), -5);
}
