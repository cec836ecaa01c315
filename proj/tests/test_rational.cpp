#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverforge/errors.hpp"
#include "coverforge/rational.hpp"

using namespace coverforge;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK((-a) == Rational(-1, 2));
    CHECK(a.inverse() == Rational(2));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), context_error);
    CHECK_THROWS_AS(Rational(0).inverse(), context_error);
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(0));
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::parse("x"), parse_error);
    CHECK_THROWS_AS(Rational::parse("1/"), parse_error);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
}

TEST_CASE("big values stay exact") {
    // 100! / 99! = 100 survives a long product chain without drift.
    Rational num(1), den(1);
    for (long k = 1; k <= 100; ++k) num *= Rational(k);
    for (long k = 1; k <= 99; ++k) den *= Rational(k);
    CHECK(num / den == Rational(100));
    Rational big = Rational(10).pow(40) + Rational(1);
    CHECK(big - Rational(10).pow(40) == Rational(1));
}
