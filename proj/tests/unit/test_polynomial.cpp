// Sparse polynomial values: term bookkeeping, arithmetic, differentiation,
// degree profiles, and exact division.
#include "doctest.h"

#include "shw/polynomial.hpp"

using namespace shw;

namespace {

GenPolynomial mono(Exponents e, Rat c) { return GenPolynomial::monomial(std::move(e), std::move(c)); }

}  // namespace

TEST_CASE("construction and term bookkeeping") {
    GenPolynomial zero(2);
    CHECK(zero.is_zero());
    CHECK(zero.dimension() == 2);
    CHECK(zero.term_count() == 0);

    GenPolynomial p(2);
    p.add_term({Rat(1), Rat(0)}, Rat(2));
    p.add_term({Rat(1), Rat(0)}, Rat(3));
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient_of({Rat(1), Rat(0)}) == 5);
    CHECK(p.coefficient_of({Rat(0), Rat(1)}) == 0);
    p.add_term({Rat(1), Rat(0)}, Rat(-5));  // cancels away entirely
    CHECK(p.is_zero());

    CHECK(GenPolynomial::constant(3, Rat(0)).is_zero());
    CHECK(mono({Rat(1), Rat(1)}, Rat(0)).is_zero());
    CHECK(GenPolynomial::constant(1, Rat(4)).is_constant());
    CHECK(mono({Rat(2)}, Rat(1)).is_monomial());
}

TEST_CASE("leading term follows the canonical order") {
    GenPolynomial p(2);
    p.add_term({Rat(0), Rat(0)}, Rat(7));
    p.add_term({Rat(1), Rat(1)}, Rat(-1));
    p.add_term({Rat(2), Rat(0)}, Rat(3));
    CHECK(p.leading_exponents() == Exponents{Rat(2), Rat(0)});
    CHECK(p.leading_coefficient() == 3);

    GenPolynomial zero(2);
    CHECK_THROWS_AS(zero.leading_exponents(), std::logic_error);
    CHECK_THROWS_AS(zero.leading_coefficient(), std::logic_error);
}

TEST_CASE("arithmetic combines term maps exactly") {
    const GenPolynomial x = mono({Rat(1), Rat(0)}, Rat(1));
    const GenPolynomial y = mono({Rat(0), Rat(1)}, Rat(1));
    const GenPolynomial sum = x + y;
    CHECK(sum.term_count() == 2);
    CHECK((sum - x) == y);
    CHECK((x - x).is_zero());
    CHECK((-x).leading_coefficient() == -1);
    CHECK((x * Rat(0)).is_zero());
    CHECK((Rat(2) * x).coefficient_of({Rat(1), Rat(0)}) == 2);

    // (x + y)^2 = x^2 + 2xy + y^2.
    const GenPolynomial square = sum * sum;
    CHECK(square.term_count() == 3);
    CHECK(square.coefficient_of({Rat(2), Rat(0)}) == 1);
    CHECK(square.coefficient_of({Rat(1), Rat(1)}) == 2);
    CHECK(square.coefficient_of({Rat(0), Rat(2)}) == 1);
}

TEST_CASE("naturality of exponents") {
    CHECK(mono({Rat(2), Rat(0)}, Rat(1)).all_natural_exponents());
    CHECK(!mono({Rat(1, 2), Rat(0)}, Rat(1)).all_natural_exponents());
    CHECK(!mono({Rat(-1), Rat(0)}, Rat(1)).all_natural_exponents());
    CHECK(GenPolynomial(2).all_natural_exponents());
}

TEST_CASE("differentiation drops vanishing natural terms and keeps formal ones") {
    // d/dx x^3 = 3 x^2; d^2/dx^2 x^3 = 6 x.
    const GenPolynomial x3 = mono({Rat(3)}, Rat(1));
    CHECK(derive(x3, {1}) == mono({Rat(2)}, Rat(3)));
    CHECK(derive(x3, {2}) == mono({Rat(1)}, Rat(6)));
    CHECK(derive(x3, {4}).is_zero());

    // Mixed derivative of x^2 y: d/dx d/dy -> 2 x.
    const GenPolynomial x2y = mono({Rat(2), Rat(1)}, Rat(1));
    CHECK(derive(x2y, {1, 1}) == mono({Rat(1), Rat(0)}, Rat(2)));
    CHECK(derive(x2y, {0, 2}).is_zero());
    CHECK(derive(x2y, {0, 0}) == x2y);

    // Fractional powers differentiate formally: d/dx x^(1/2) = (1/2) x^(-1/2).
    const GenPolynomial root = mono({Rat(1, 2)}, Rat(1));
    CHECK(derive(root, {1}) == mono({Rat(-1, 2)}, Rat(1, 2)));
    // Negative powers never vanish: d/dx x^(-1) = -x^(-2).
    CHECK(derive(mono({Rat(-1)}, Rat(1)), {1}) == mono({Rat(-2)}, Rat(-1)));
}

TEST_CASE("degree profile") {
    GenPolynomial p(2);
    p.add_term({Rat(2), Rat(1)}, Rat(1));
    p.add_term({Rat(0), Rat(2)}, Rat(5));
    const DegreeProfile profile = degree_profile(p);
    REQUIRE(profile.total.has_value());
    CHECK(*profile.total == 3);
    REQUIRE(profile.per_coordinate.size() == 2);
    CHECK(*profile.per_coordinate[0] == 2);
    CHECK(*profile.per_coordinate[1] == 2);

    const DegreeProfile empty = degree_profile(GenPolynomial(2));
    CHECK(!empty.total.has_value());
    CHECK(!empty.per_coordinate[0].has_value());
}

TEST_CASE("exact quotient divides or refuses") {
    const GenPolynomial x = mono({Rat(1), Rat(0)}, Rat(1));
    const GenPolynomial y = mono({Rat(0), Rat(1)}, Rat(1));
    const GenPolynomial product = (x + y) * (x - y);
    CHECK(exact_quotient(product, x + y) == x - y);
    CHECK(exact_quotient(product, x - y) == x + y);
    CHECK_THROWS_AS(exact_quotient(x + y, x), std::domain_error);
    CHECK_THROWS_AS(exact_quotient(x, x * x), std::domain_error);
}

TEST_CASE("monomial value converts to a polynomial") {
    MonomialValue value;
    value.coefficient = Rat(-3, 2);
    value.exponents = Exponents{Rat(2), Rat(1)};
    CHECK(value.to_polynomial(2) == mono({Rat(2), Rat(1)}, Rat(-3, 2)));

    MonomialValue zero;
    zero.coefficient = 0;
    CHECK(zero.to_polynomial(2).is_zero());
}
