#include "doctest.h"

#include <stdexcept>

#include "cpoly/rational.hpp"

using namespace cpoly;

TEST_CASE("parse_rational reads integers and fractions") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("100000000000000000000") ==
          Rational(Integer("100000000000000000000")));
}

TEST_CASE("parse_rational canonicalizes") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(format_rational(parse_rational("4/6")) == "2/3");
    CHECK(parse_rational("6/-4") == Rational(-3, 2));
    CHECK(format_rational(parse_rational("6/-4")) == "-3/2");
    CHECK(parse_rational("0/5") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("format_rational round-trips through parse_rational") {
    const char* cases[] = {"0", "7", "-7", "1/3", "-22/7", "1000000007"};
    for (const char* s : cases) {
        CHECK(format_rational(parse_rational(s)) == s);
    }
}

TEST_CASE("is_integer and conversions") {
    CHECK(is_integer(Rational(4)));
    CHECK(is_integer(Rational(-4)));
    CHECK(is_integer(Rational(6, 3)));
    CHECK(!is_integer(Rational(1, 2)));
    CHECK(rational_to_long(Rational(-12)) == -12);
    CHECK_THROWS_AS(rational_to_long(Rational(1, 2)), std::invalid_argument);
}
