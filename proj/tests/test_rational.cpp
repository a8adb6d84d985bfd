#include <doctest.h>

#include <stdexcept>

#include "fuzzygraph/rational.hpp"

using fuzzygraph::Rational;

TEST_CASE("normalizes sign and common factors") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("decimal parsing") {
    CHECK(Rational::parse_decimal("0.25") == Rational(1, 4));
    CHECK(Rational::parse_decimal("1") == Rational(1));
    CHECK(Rational::parse_decimal("0.000001") == Rational(1, 1000000));
    CHECK(Rational::parse_decimal("0.810000") == Rational(81, 100));
    for (const char* bad : {"", ".", "-0.5", "+1", "1e3", "0.5x", "1..2", " 0.5", "0x1"})
        CHECK_THROWS_AS(Rational::parse_decimal(bad), std::invalid_argument);
    CHECK_THROWS(Rational::parse_decimal("0.1234567890123456789"));
}

TEST_CASE("shortest exact decimal text") {
    CHECK(Rational(1).to_string() == "1.0");
    CHECK(Rational(0).to_string() == "0.0");
    CHECK(Rational(81, 100).to_string() == "0.81");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(1, 8).to_string() == "0.125");
    for (const char* s : {"0.5", "0.05", "0.729", "0.000001", "0.9"})
        CHECK(Rational::parse_decimal(Rational::parse_decimal(s).to_string()) == Rational::parse_decimal(s));
}

TEST_CASE("arithmetic is exact") {
    Rational tenth(1, 10);
    Rational sum;
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Rational(1));
    CHECK(Rational(9, 10) * Rational(9, 10) == Rational(81, 100));
    CHECK(Rational(9, 10) + Rational(9, 10) - Rational(1) == Rational(4, 5));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("overflow is reported, not wrapped") {
    Rational big(INT64_MAX / 2 + 1);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    Rational tiny(1, INT64_MAX / 3);
    CHECK_THROWS_AS(tiny * tiny, std::overflow_error);
}
