#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "envelope/rational.hpp"

using envelope::BigInt;
using envelope::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    Rational r(BigInt(6), BigInt(-9));
    CHECK(r.num() == -2);
    CHECK(r.den() == 3);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(-4, -2) == Rational(2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), envelope::ValidationError);
}

TEST_CASE("arithmetic stays exact") {
    Rational a(1, 3);
    Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), envelope::ValidationError);

    Rational sum;
    for (int i = 0; i < 100; ++i)
        sum += Rational(1, 100);
    CHECK(sum == Rational(1));
}

TEST_CASE("comparisons use cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
}

TEST_CASE("parse accepts fractions, integers, and exact decimals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse(""), envelope::ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/0"), envelope::ValidationError);
    CHECK_THROWS_AS(Rational::parse("a/b"), envelope::ValidationError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), envelope::ValidationError);
}

TEST_CASE("from_double is exact for dyadic values") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-2.0) == Rational(-2));
    CHECK(Rational::from_double(0.0) == Rational(0));

    Rational third = Rational::from_double(1.0 / 3.0);
    CHECK(third.to_double() == 1.0 / 3.0);
}

TEST_CASE("from_double_rounded keeps a fixed number of decimal digits") {
    CHECK(Rational::from_double_rounded(0.1, 12) == Rational(1, 10));
    CHECK(Rational::from_double_rounded(0.123456789012345, 12)
          == Rational(BigInt(123456789012), BigInt("1000000000000")));
    CHECK(Rational::from_double_rounded(1.0, 12) == Rational(1));
    CHECK(Rational::from_double_rounded(-0.25, 12) == Rational(-1, 4));
}

TEST_CASE("str renders num/den and decimal_str rounds half away from zero") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(-5, 10).str() == "-1/2");
    CHECK(Rational(3, 4).decimal_str() == "0.750000");
    CHECK(Rational(1, 3).decimal_str() == "0.333333");
    CHECK(Rational(2, 3).decimal_str() == "0.666667");
    CHECK(Rational(-1, 2).decimal_str(0) == "-1");
    CHECK(Rational(1, 8).decimal_str(2) == "0.13");
    CHECK(Rational(11, 4).decimal_str() == "2.750000");
}

TEST_CASE("parse and str round-trip") {
    const char* cases[] = {"0", "-7", "22/7", "-355/113", "1000000007/2"};
    for (const char* text : cases)
        CHECK(Rational::parse(text).str() == text);
}

TEST_CASE("to_double matches the quotient") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(9, 4).to_double() == doctest::Approx(2.25));
    CHECK(Rational(-1, 3).to_double() == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("huge intermediate values never overflow") {
    Rational big(BigInt("123456789123456789"), BigInt(1));
    Rational r = big * big + Rational(1, big.num());
    CHECK(r > big);
    CHECK((r - big * big) * big == Rational(1));
}
