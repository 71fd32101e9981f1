#include "etso/exact.hpp"
#include "etso/halfint.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace etso;

namespace {

SqrtLinear r(long long p, long long q) { return SqrtLinear(Rational(p, q)); }

// Random element of Q[sqrt 2, sqrt 3, sqrt 5] + i(...) with small coefficients.
ExactComplex random_value(std::mt19937& gen) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), pick(0, 3);
    const std::uint64_t radicals[] = {1, 2, 3, 5};
    SqrtLinear re, im;
    for (int k = 0; k < 3; ++k) {
        re += SqrtLinear::term(Rational(num(gen), den(gen)), radicals[pick(gen)]);
        im += SqrtLinear::term(Rational(num(gen), den(gen)), radicals[pick(gen)]);
    }
    return ExactComplex(re, im);
}

}  // namespace

TEST(Exact, SquareFreeReduction) {
    EXPECT_EQ(SqrtLinear::term(1, 8), SqrtLinear::term(2, 2));
    EXPECT_EQ(SqrtLinear::term(3, 1), SqrtLinear(3));
    EXPECT_EQ(SqrtLinear::sqrt_of(Rational(4, 9)), r(2, 3));
    EXPECT_EQ(SqrtLinear::sqrt_of(Rational(1, 2)), SqrtLinear::term(Rational(1, 2), 2));
    auto [k, d] = square_free_split(BigInt(72));
    EXPECT_EQ(k, 6);
    EXPECT_EQ(d, 2u);
}

TEST(Exact, RadicalProductsCombine) {
    const SqrtLinear s2 = SqrtLinear::term(1, 2), s3 = SqrtLinear::term(1, 3), s6 = SqrtLinear::term(1, 6);
    EXPECT_EQ(s2 * s3, s6);
    EXPECT_EQ(s6 * s6, SqrtLinear(6));
    EXPECT_TRUE((s2 - s2).is_zero());
    EXPECT_FALSE((s2 + s3).is_rational());
}

TEST(Exact, InverseOfTwoTermValue) {
    const SqrtLinear v = SqrtLinear(1) + SqrtLinear::term(1, 2);  // 1 + sqrt 2
    EXPECT_EQ(v * v.inverse(), SqrtLinear(1));
    EXPECT_EQ(v.inverse(), SqrtLinear::term(1, 2) - SqrtLinear(1));
    EXPECT_THROW(SqrtLinear().inverse(), ExactError);
}

TEST(Exact, ComplexArithmetic) {
    const ExactComplex i = ExactComplex::i();
    EXPECT_EQ(i * i, ExactComplex(-1));
    EXPECT_EQ((ExactComplex(1) + i).norm(), SqrtLinear(2));
    EXPECT_EQ(ExactComplex(3, 4) / ExactComplex(3, 4), ExactComplex(1));
    EXPECT_EQ(ExactComplex(2, 5).conj(), ExactComplex(2, -5));
}

TEST(Exact, CanonicalStrings) {
    EXPECT_EQ(to_string(SqrtLinear()), "0");
    EXPECT_EQ(to_string(SqrtLinear::sqrt_of(Rational(2, 5))), "(1/5)*sqrt(10)");
    EXPECT_EQ(to_string(ExactComplex(SqrtLinear(), -SqrtLinear::sqrt_of(Rational(2, 5)))), "i*((-1/5)*sqrt(10))");
    EXPECT_EQ(to_display(ExactComplex(SqrtLinear(), -SqrtLinear::sqrt_of(Rational(2, 5)))), "-i√(2/5)");
}

TEST(Exact, ParserGrammar) {
    EXPECT_EQ(parse_exact("sqrt(8)"), ExactComplex(SqrtLinear::term(2, 2)));
    EXPECT_EQ(parse_exact("-i*sqrt(2/5)"), ExactComplex(SqrtLinear(), -SqrtLinear::sqrt_of(Rational(2, 5))));
    EXPECT_EQ(parse_exact("(1 + sqrt(2)) * (1 - sqrt(2))"), ExactComplex(-1));
    EXPECT_EQ(parse_exact("1/(2*sqrt(3))"), ExactComplex(SqrtLinear::term(Rational(1, 6), 3)));
    EXPECT_EQ(parse_exact(" 0 "), ExactComplex());
}

TEST(Exact, ParserRejectsMalformed) {
    for (const char* bad : {"", "sqrt(", "1 +", "sqrt(-2)", "x", "2**3", "1/0", "(1"}) {
        EXPECT_THROW(parse_exact(bad), ParseError) << bad;
    }
}

// Property: canonical form parses back to the same value, for random values.
TEST(Exact, CanonicalRoundTripProperty) {
    std::mt19937 gen(7);
    for (int k = 0; k < 300; ++k) {
        const ExactComplex v = random_value(gen);
        const std::string s = to_string(v);
        EXPECT_EQ(parse_exact(s), v) << s;
        EXPECT_EQ(to_string(parse_exact(s)), s);
    }
}

// Property: field operations agree with floating point.
TEST(Exact, AgreesWithFloatingPointProperty) {
    std::mt19937 gen(11);
    for (int k = 0; k < 300; ++k) {
        const ExactComplex a = random_value(gen), b = random_value(gen);
        const auto fa = a.to_complex(), fb = b.to_complex();
        EXPECT_LT(std::abs((a * b).to_complex() - fa * fb), 1e-9);
        EXPECT_LT(std::abs((a - b).to_complex() - (fa - fb)), 1e-12);
        EXPECT_NEAR(a.norm().to_double(), std::norm(fa), 1e-9);
    }
}

TEST(HalfInt, ParseAndPrint) {
    EXPECT_EQ(HalfInt::parse("3/2").twice, 3);
    EXPECT_EQ(HalfInt::parse("-1/2").twice, -1);
    EXPECT_EQ(HalfInt::parse("2").twice, 4);
    EXPECT_EQ(HalfInt::from_twice(-5).str(), "-5/2");
    EXPECT_EQ(HalfInt::from_int(3).str(), "3");
    EXPECT_THROW(HalfInt::parse("1/3"), std::invalid_argument);
    EXPECT_THROW(HalfInt::parse("0.5"), std::invalid_argument);
    EXPECT_THROW(HalfInt::from_twice(3).as_int(), std::invalid_argument);
}
