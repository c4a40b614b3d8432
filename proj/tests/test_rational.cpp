#include <gtest/gtest.h>

#include "dpers/errors.hpp"
#include "dpers/rational.hpp"

using namespace dpers;

TEST(Rational, Parse) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("+1.5"), Rational(3, 2));
    EXPECT_FALSE(try_parse_rational("1/0"));
    EXPECT_FALSE(try_parse_rational("abc"));
    EXPECT_FALSE(try_parse_rational(""));
    EXPECT_THROW(parse_rational("1/"), DomainError);
}

TEST(Rational, Printing) {
    EXPECT_EQ(to_string(Rational(4, 5)), "4/5");
    EXPECT_EQ(to_string(Rational(2)), "2");
    EXPECT_EQ(to_decimal(Rational(1, 3), 3), "0.333");
    EXPECT_EQ(to_decimal(Rational(2, 3), 2), "0.67");
    EXPECT_EQ(to_decimal(Rational(1, 2), 0), "1");
}

TEST(Degree, Range) {
    EXPECT_THROW(Degree(Rational(3, 2)), DomainError);
    EXPECT_THROW(Degree(Rational(-1, 2)), DomainError);
    EXPECT_EQ(Degree(1, 4).complement(), Degree(3, 4));
    EXPECT_LT(Degree::zero(), Degree::one());
    EXPECT_EQ(to_string(Degree(2, 4)), "1/2");
}
