#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

TEST(Rational, MakeReducesToCanonicalForm)
{
    EXPECT_EQ(rat_make(2, 4).str(), "1/2");
    EXPECT_EQ(rat_make(3, -6).str(), "-1/2");
    auto zero = rat_make(0, 7);
    EXPECT_EQ(zero.num(), 0);
    EXPECT_EQ(zero.den(), 1);
    EXPECT_THROW(rat_make(1, 0), std::domain_error);
}

TEST(Rational, Pow)
{
    EXPECT_EQ(rat_pow(R("65/64"), 2), R("4225/4096"));
    EXPECT_EQ(rat_pow(R("1/2"), 0), R("1"));
    EXPECT_EQ(rat_pow(R("1/4"), 2), R("1/16"));
    EXPECT_THROW(rat_pow(R("2"), -1), std::domain_error);
}

TEST(Rational, Compare)
{
    EXPECT_EQ(rat_cmp(R("4225/4096"), R("8/7")), std::strong_ordering::less);
    EXPECT_EQ(rat_cmp(R("1/2"), R("2/4")), std::strong_ordering::equal);
    EXPECT_EQ(rat_cmp(R("7/8"), R("4096/4225")), std::strong_ordering::less);
}

TEST(Rational, LargeExponentsStayExact)
{
    auto mu = rat_pow(Rational(2), 64);
    auto big = rat_pow(mu, 40);
    EXPECT_EQ(big.num(), mpz_class(1) << 2560);
    EXPECT_EQ(big / rat_pow(mu, 39), mu);
}

TEST(Rational, ParseRefusesDecimals)
{
    EXPECT_EQ(R("-3/9"), rat_make(-1, 3));
    EXPECT_EQ(R("5"), Rational(5));
    EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), std::domain_error); }

TEST(Rational, CeilRoundsTowardsPositiveInfinity)
{
    EXPECT_EQ(R("7/2").ceil(), 4);
    EXPECT_EQ(R("-7/2").ceil(), -3);
    EXPECT_EQ(R("3").ceil(), 3);
}

TEST(RationalProperty, CompareMatchesCrossMultiplication)
{
    Gen gen(11);
    for (int it = 0; it < 2000; ++it) {
        auto a = gen.signed_rational(50, 40);
        auto b = gen.signed_rational(50, 40);
        mpz_class cross = a.num() * b.den() - b.num() * a.den();
        auto ord = rat_cmp(a, b);
        EXPECT_EQ(ord == std::strong_ordering::less, sgn(cross) < 0);
        EXPECT_EQ(ord == std::strong_ordering::equal, sgn(cross) == 0);
        EXPECT_EQ(ord == std::strong_ordering::greater, sgn(cross) > 0);
    }
}

TEST(RationalProperty, PowIsAdditiveInTheExponent)
{
    Gen gen(12);
    for (int it = 0; it < 500; ++it) {
        auto x = gen.signed_rational(20, 20);
        long e1 = gen.integer(0, 16), e2 = gen.integer(0, 16);
        EXPECT_EQ(rat_pow(x, e1 + e2), rat_pow(x, e1) * rat_pow(x, e2));
    }
}

TEST(RationalProperty, StringRoundTrip)
{
    Gen gen(13);
    for (int it = 0; it < 2000; ++it) {
        auto x = gen.signed_rational(1000000, 1000000);
        auto s = x.str();
        EXPECT_EQ(Rational::parse(s), x);
        EXPECT_EQ(Rational::parse(s).str(), s);
        EXPECT_EQ(gcd(x.num(), x.den()), 1);
        EXPECT_GT(x.den(), 0);
    }
}
