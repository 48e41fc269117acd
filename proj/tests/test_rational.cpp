#include "tropsym/rational.hpp"

#include "doctest.h"

using namespace tropsym;

TEST_CASE("parse_rational accepts integers, fractions, and decimals") {
    CHECK(*parse_rational("42") == Rational(42));
    CHECK(*parse_rational("-7") == Rational(-7));
    CHECK(*parse_rational("3/4") == Rational(3) / 4);
    CHECK(*parse_rational("-9/6") == Rational(-3) / 2);
    CHECK(*parse_rational("0.25") == Rational(1) / 4);
    CHECK(*parse_rational("-1.5") == Rational(-3) / 2);
    CHECK(*parse_rational("2.") == Rational(2));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("x"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1/2/3"));
    CHECK_FALSE(parse_rational("1.2.3"));
    CHECK_FALSE(parse_rational("2 "));
}

TEST_CASE("format_rational round-trips through parse") {
    for (const char* text : {"0", "-5", "7/3", "-22/7"}) {
        Rational v = *parse_rational(text);
        CHECK(*parse_rational(format_rational(v)) == v);
        CHECK(format_rational(v) == text);
    }
    // reduced form on output
    CHECK(format_rational(Rational(4) / 8) == "1/2");
    CHECK(format_rational(Rational(6) / 3) == "2");
}
