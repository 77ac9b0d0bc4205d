// The polynomial text grammar: parsing, canonical formatting, and the
// round-trip between them.
#include "doctest.h"

#include "shw/parser.hpp"

using namespace shw;

TEST_CASE("single terms parse") {
    CHECK(parse_poly("0", 1).is_zero());
    CHECK(parse_poly("1", 2) == GenPolynomial::constant(2, Rat(1)));
    CHECK(parse_poly("-7/2", 1) == GenPolynomial::constant(1, Rat(-7, 2)));
    CHECK(parse_poly("x", 2) == GenPolynomial::monomial({Rat(1), Rat(0)}, Rat(1)));
    CHECK(parse_poly("3*x^2", 1) == GenPolynomial::monomial({Rat(2)}, Rat(3)));
    CHECK(parse_poly("x*y", 2) == GenPolynomial::monomial({Rat(1), Rat(1)}, Rat(1)));
    CHECK(parse_poly("x*x", 1) == GenPolynomial::monomial({Rat(2)}, Rat(1)));
    CHECK(parse_poly("1/2*x*y^3", 2) == GenPolynomial::monomial({Rat(1), Rat(3)}, Rat(1, 2)));
}

TEST_CASE("exponents may be negative or parenthesized rationals") {
    CHECK(parse_poly("x^-2", 1) == GenPolynomial::monomial({Rat(-2)}, Rat(1)));
    CHECK(parse_poly("x^(1/2)", 1) == GenPolynomial::monomial({Rat(1, 2)}, Rat(1)));
    CHECK(parse_poly("x^(-3/2)", 1) == GenPolynomial::monomial({Rat(-3, 2)}, Rat(1)));
}

TEST_CASE("sums and signs combine") {
    GenPolynomial expected(2);
    expected.add_term({Rat(2), Rat(0)}, Rat(1));
    expected.add_term({Rat(0), Rat(2)}, Rat(-1));
    CHECK(parse_poly("x^2 - y^2", 2) == expected);
    CHECK(parse_poly("x^2 + -y^2", 2) == expected);
    CHECK(parse_poly(" - y^2 + x^2 ", 2) == expected);
    CHECK(parse_poly("x - x", 1).is_zero());
    CHECK(parse_poly("2*x + 3*x", 1) == GenPolynomial::monomial({Rat(1)}, Rat(5)));
}

TEST_CASE("all eight variable names resolve by position") {
    const char names[] = {'x', 'y', 'z', 'w', 'r', 't', 'u', 's'};
    for (unsigned i = 0; i < 8; ++i) {
        CHECK(variable_name(i) == names[i]);
        Exponents e(8, Rat(0));
        e[i] = Rat(1);
        CHECK(parse_poly(std::string(1, names[i]), 8) == GenPolynomial::monomial(e, Rat(1)));
    }
    CHECK_THROWS_AS(variable_name(8), std::invalid_argument);
}

TEST_CASE("parse failures carry positions") {
    CHECK_THROWS_AS(parse_poly("", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y", 1), std::invalid_argument);  // beyond dimension
    CHECK_THROWS_AS(parse_poly("2x", 1), std::invalid_argument);  // missing '*'
    CHECK_THROWS_AS(parse_poly("x^(1/0)", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x +", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x", 9), std::invalid_argument);
    CHECK_THROWS(parse_poly("x^(1/2", 1));
}

TEST_CASE("formatting is canonical") {
    CHECK(format_poly(GenPolynomial(2)) == "0");
    CHECK(format_poly(parse_poly("y + x", 2)) == "x + y");
    CHECK(format_poly(parse_poly("1 + x^2 - 3*x", 1)) == "x^2 - 3*x + 1");
    CHECK(format_poly(parse_poly("-x*y", 2)) == "-x*y");
    CHECK(format_poly(parse_poly("1*x", 2)) == "x");
    CHECK(format_poly(parse_poly("-1/2*x + 2/4*y", 2)) == "-1/2*x + 1/2*y");
    CHECK(format_poly(parse_poly("x^(1/2)", 1)) == "x^(1/2)");
    CHECK(format_poly(parse_poly("x^-2", 1)) == "x^-2");
}

TEST_CASE("parse of format is the identity") {
    const char* samples[] = {
        "0", "1", "-7/2", "x^2 - y^2", "x*y + 3", "-x^2*y + 1/3*x*y^2 - y",
        "x^(1/2) + x^(-3/2)", "2*x^3 - x + 5",
    };
    for (const char* text : samples) {
        const GenPolynomial p = parse_poly(text, 2);
        CHECK(parse_poly(format_poly(p), 2) == p);
    }
}
