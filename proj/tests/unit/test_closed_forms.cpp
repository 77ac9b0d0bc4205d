// Closed-form bracket families: the single-slot replacement, the two-top
// planar formula, and shifted generalized monomials.
#include "doctest.h"

#include "shw/closed_forms.hpp"
#include "shw/parser.hpp"
#include "shw/wronskian.hpp"

using namespace shw;

TEST_CASE("single-slot replacement: pinned planar values") {
    BracketContext ctx(2, 1);
    // Slot 2 replaced by x^2 in (1, ., y): equals the engine value 2x.
    CHECK(lonely_structure_bracket(ctx, 2, {Rat(2), Rat(0)}) == parse_poly("2*x", 2));
    // Slot 3 replaced by x^2 in (1, x, .): derivative in y kills it.
    CHECK(lonely_structure_bracket(ctx, 3, {Rat(2), Rat(0)}) == parse_poly("0", 2));
    // Slot 1 replaced by x*y in (., x, y).
    CHECK(lonely_structure_bracket(ctx, 1, {Rat(1), Rat(1)}) == parse_poly("-x*y", 2));
    // Replacing a slot by its own standard monomial reproduces the constant 1.
    CHECK(lonely_structure_bracket(ctx, 1, {Rat(0), Rat(0)}) == parse_poly("1", 2));
}

TEST_CASE("single-slot replacement equals the engine on a spot grid") {
    BracketContext ctx(2, 2);
    const std::vector<GenPolynomial> base = standard_monomials(ctx);
    for (std::size_t j = 1; j <= ctx.arity(); ++j) {
        for (unsigned a1 = 0; a1 <= 3; ++a1) {
            for (unsigned a2 = 0; a2 <= 3; ++a2) {
                std::vector<GenPolynomial> args = base;
                args[j - 1] = GenPolynomial::monomial({Rat(a1), Rat(a2)}, Rat(1));
                CAPTURE(j);
                CAPTURE(a1);
                CAPTURE(a2);
                CHECK(lonely_structure_bracket(ctx, j, {Rat(a1), Rat(a2)}) ==
                      bracket(ctx, args));
            }
        }
    }
}

TEST_CASE("single-slot replacement: differential form and input validation") {
    BracketContext ctx(2, 1);
    // The differential wrapper scales the row derivative of a monomial, so a
    // coefficient passes straight through.
    const GenPolynomial scaled = parse_poly("3*x^2*y", 2);
    CHECK(lonely_structure_bracket_differential(ctx, 2, scaled) ==
          lonely_structure_bracket(ctx, 2, {Rat(2), Rat(1)}) * Rat(3));
    CHECK(lonely_structure_bracket_differential(ctx, 3, parse_poly("x^2", 2)) ==
          lonely_structure_bracket(ctx, 3, {Rat(2), Rat(0)}));
    // Sums are rejected: the scalar prefactor depends on the total degree.
    CHECK_THROWS_AS(lonely_structure_bracket_differential(ctx, 2, parse_poly("x^2 + 3*x*y", 2)),
                    std::invalid_argument);

    CHECK_THROWS_AS(lonely_structure_bracket(ctx, 0, {Rat(1), Rat(0)}), std::out_of_range);
    CHECK_THROWS_AS(lonely_structure_bracket(ctx, 4, {Rat(1), Rat(0)}), std::out_of_range);
    CHECK_THROWS_AS(lonely_structure_bracket(ctx, 1, {Rat(1, 2), Rat(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lonely_structure_bracket(ctx, 1, {Rat(-1), Rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("two-top formula: pinned values and engine agreement") {
    BracketContext ctx(2, 1);
    // p = x^2, q = x*y: coefficient -1, exponent tuple (2, 1).
    const MonomialValue pinned = golden_bracket(ctx, {Rat(2), Rat(0)}, {Rat(1), Rat(1)});
    CHECK(pinned.coefficient == -1);
    REQUIRE(pinned.exponents.has_value());
    CHECK(*pinned.exponents == Exponents{Rat(2), Rat(1)});

    // Equal tops cancel.
    const MonomialValue zero = golden_bracket(ctx, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
    CHECK(zero.coefficient == 0);
    CHECK(!zero.exponents.has_value());

    // Higher order: the closed form tracks the engine with q in the constant
    // slot and p in the linear-x slot.
    BracketContext deep(2, 3);
    const Exponents p = {Rat(4), Rat(1)};
    const Exponents q = {Rat(2), Rat(3)};
    std::vector<GenPolynomial> args = standard_monomials(deep);
    args[0] = GenPolynomial::monomial(q, Rat(1));
    args[1] = GenPolynomial::monomial(p, Rat(1));
    CHECK(golden_bracket(deep, p, q).to_polynomial(2) == bracket(deep, args));
}

TEST_CASE("generalized monomial shift constant") {
    CHECK(witt_shift(BracketContext(1, 1)) == 1);
    CHECK(witt_shift(BracketContext(2, 1)) == Rat(1, 2));
    CHECK(witt_shift(BracketContext(1, 2)) == Rat(3, 2));  // (2/2) * (3/2)
    CHECK(witt_shift(BracketContext(1, 3)) == Rat(2));     // (3/2) * (4/3)
}

TEST_CASE("shifted generators and their bracket law") {
    BracketContext line(1, 1);
    CHECK(witt_generator(line, {Rat(3)}) == parse_poly("x^4", 1));
    CHECK(witt_generator(line, {Rat(-1, 2)}) == parse_poly("x^(1/2)", 1));

    const WittBracket pinned = witt_bracket(line, {{Rat(3)}, {Rat(5)}});
    CHECK(pinned.omega == 2);
    CHECK(pinned.index_sum == Exponents{Rat(8)});
    // [a_3, a_5] = 2 a_8, checked through the engine.
    CHECK(bracket(line, {witt_generator(line, {Rat(3)}), witt_generator(line, {Rat(5)})}) ==
          witt_generator(line, {Rat(8)}) * Rat(2));

    // A planar rational-index example, again against the engine.
    BracketContext plane(2, 1);
    const std::vector<Exponents> indices = {
        {Rat(1, 2), Rat(0)}, {Rat(2), Rat(1)}, {Rat(0), Rat(-1, 3)}};
    const WittBracket wb = witt_bracket(plane, indices);
    CHECK(wb.index_sum == Exponents{Rat(5, 2), Rat(2, 3)});
    std::vector<GenPolynomial> args;
    for (const Exponents& index : indices) {
        args.push_back(witt_generator(plane, index));
    }
    CHECK(bracket(plane, args) == witt_generator(plane, wb.index_sum) * wb.omega);

    CHECK_THROWS_AS(witt_bracket(line, {{Rat(1)}}), std::invalid_argument);
}
