// Exact scalar arithmetic: combinatorial helpers, predicates, and the
// rational text round-trip.
#include "doctest.h"

#include "shw/rational.hpp"

using namespace shw;

TEST_CASE("factorial small values and a larger pinned one") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(Rat(5), 0) == 1);
    CHECK(falling_factorial(Rat(5), 3) == 60);       // 5*4*3
    CHECK(falling_factorial(Rat(2), 3) == 0);        // hits the factor 2-2
    CHECK(falling_factorial(Rat(2), 5) == 0);        // stays zero past it
    CHECK(falling_factorial(Rat(-1), 3) == -6);      // (-1)(-2)(-3)
    CHECK(falling_factorial(Rat(1, 2), 2) == Rat(-1, 4));  // (1/2)(-1/2)
}

TEST_CASE("rational powers with zero to the zero equal to one") {
    CHECK(pow_rational(Rat(0), 0) == 1);
    CHECK(pow_rational(Rat(0), 3) == 0);
    CHECK(pow_rational(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(pow_rational(Rat(-2), 5) == -32);
    CHECK(pow_rational(Rat(7), 1) == 7);
}

TEST_CASE("integrality predicates") {
    CHECK(is_integer(Rat(4, 2)));
    CHECK(!is_integer(Rat(1, 2)));
    CHECK(is_natural(Rat(0)));
    CHECK(is_natural(Rat(3)));
    CHECK(!is_natural(Rat(-3)));
    CHECK(!is_natural(Rat(3, 2)));
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rat(7)) == "7");
    CHECK(format_rational(Rat(-3, 2)) == "-3/2");
    CHECK(format_rational(Rat(4, 2)) == "2");
    CHECK(format_rational(Rat(0)) == "0");
    CHECK(format_rational(Rat(2) / Rat(-4)) == "-1/2");  // sign normalizes to the numerator
}

TEST_CASE("rational parsing round-trips and failures") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/2") == Rat(-3, 2));
    CHECK(parse_rational("+5/10") == Rat(1, 2));
    CHECK(parse_rational(format_rational(Rat(-22, 7))) == Rat(-22, 7));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
}
