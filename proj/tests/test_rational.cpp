#include <gtest/gtest.h>

#include "cliffgrass/error.hpp"
#include "cliffgrass/rational.hpp"
#include "cliffgrass/rng.hpp"

namespace cliffgrass {
namespace {

TEST(Rational, CanonicalForm) {
    const Rational r(6, 4);
    EXPECT_EQ(r.numerator(), 3);
    EXPECT_EQ(r.denominator(), 2);

    const Rational neg(3, -6);
    EXPECT_EQ(neg.numerator(), -1);
    EXPECT_EQ(neg.denominator(), 2);

    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_EQ(Rational(0).denominator(), 1);
}

TEST(Rational, ExactArithmetic) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
}

TEST(Rational, ReciprocalLaw) {
    RationalSampler rng(7);
    for (int t = 0; t < 500; ++t) {
        const Rational r = rng.nonzero_rational();
        EXPECT_TRUE((r * r.reciprocal()).is_one());
    }
}

TEST(Rational, ZeroDivision) {
    EXPECT_THROW(Rational(1, 0), ValidationError);
    EXPECT_THROW(Rational(1) / Rational(0), ValidationError);
    EXPECT_THROW(Rational(0).reciprocal(), ValidationError);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-1"), Rational(-1));
    EXPECT_EQ(Rational::parse("3/5"), Rational(3, 5));
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_EQ(Rational(-3, 2).str(), "-3/2");
    EXPECT_EQ(Rational(7).str(), "7");

    EXPECT_THROW(Rational::parse(""), ValidationError);
    EXPECT_THROW(Rational::parse("1/"), ValidationError);
    EXPECT_THROW(Rational::parse("1/0"), ValidationError);
    EXPECT_THROW(Rational::parse("1/-2"), ValidationError);
    EXPECT_THROW(Rational::parse("a"), ValidationError);
    EXPECT_THROW(Rational::parse("1.5"), ValidationError);
}

TEST(Rational, ParseRoundTrip) {
    RationalSampler rng(11);
    for (int t = 0; t < 300; ++t) {
        const Rational r = rng.rational() * rng.rational() + rng.rational();
        EXPECT_EQ(Rational::parse(r.str()), r);
    }
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

}  // namespace
}  // namespace cliffgrass
