// Randomized laws of span reduction and the span-level algebra analysis.
#include "doctest.h"

#include "shw/algebra.hpp"
#include "shw/polynomial.hpp"
#include "support/generators.hpp"

#include <random>

using namespace shw;
using shw::testing::random_natural_tuple;
using shw::testing::random_poly;
using shw::testing::random_rational;

TEST_CASE("span reduction is idempotent and order-insensitive") {
    std::mt19937 rng(4001u);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<GenPolynomial> polys;
        std::uniform_int_distribution<int> count(1, 7);
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            polys.push_back(random_poly(rng, 2, 3, 3, 5));
        }
        const SpanBasis once = span_reduce(polys, 2);
        const SpanBasis twice = span_reduce(once.elements(), 2);
        CHECK(twice.size() == once.size());
        CHECK(twice.elements() == once.elements());

        std::vector<GenPolynomial> reversed(polys.rbegin(), polys.rend());
        const SpanBasis backwards = span_reduce(reversed, 2);
        CHECK(backwards.size() == once.size());
        CHECK(backwards.elements() == once.elements());
    }
}

TEST_CASE("spans contain every random linear combination of their members") {
    std::mt19937 rng(4002u);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<GenPolynomial> polys;
        for (int i = 0; i < 4; ++i) {
            polys.push_back(random_poly(rng, 2, 3, 3, 5));
        }
        const SpanBasis basis = span_reduce(polys, 2);
        GenPolynomial combination(2);
        for (const GenPolynomial& p : polys) {
            combination += p * random_rational(rng, 4, 3);
        }
        CHECK(basis.contains(combination));
        if (!combination.is_zero()) {
            CHECK(!basis.contains(combination +
                                  GenPolynomial::monomial({Rat(0), Rat(7)}, Rat(1))));
        }
    }
}

TEST_CASE("a full degree-k space plus one homogeneous top stays closed") {
    std::mt19937 rng(4003u);
    BracketContext ctx(2, 2);
    std::uniform_int_distribution<int> coefficient(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        GenPolynomial top(2);
        for (unsigned a = 0; a <= 3; ++a) {
            top.add_term({Rat(a), Rat(3 - a)}, Rat(coefficient(rng)));
        }
        if (top.is_zero()) {
            top.add_term({Rat(3), Rat(0)}, Rat(1));
        }
        std::vector<GenPolynomial> generators = standard_monomials(ctx);
        generators.push_back(top);
        const SpanBasis basis = span_reduce(generators, 2);
        CHECK(is_closed(ctx, basis).closed);
        const SpanBasis image = bracket_image(ctx, basis);
        for (const GenPolynomial& value : image.elements()) {
            CHECK(basis.contains(value));
        }
    }
}

TEST_CASE("a deficient coordinate forces an empty bracket image") {
    std::mt19937 rng(4004u);
    BracketContext ctx(2, 2);  // per-coordinate shift 4
    for (int trial = 0; trial < 10; ++trial) {
        // Polynomials in y alone: the x-degree sum of any six arguments is 0.
        std::vector<GenPolynomial> polys;
        for (int i = 0; i < 8; ++i) {
            GenPolynomial p(2);
            std::uniform_int_distribution<int> exponent(0, 6);
            std::uniform_int_distribution<int> coefficient(-5, 5);
            for (int t = 0; t < 3; ++t) {
                p.add_term({Rat(0), Rat(exponent(rng))}, Rat(coefficient(rng)));
            }
            polys.push_back(p);
        }
        const SpanBasis basis = span_reduce(polys, 2);
        CHECK(bracket_image(ctx, basis).empty());
        CHECK(is_closed(ctx, basis).closed);
    }
}

TEST_CASE("an exact coordinate confines the image to degree zero there") {
    std::mt19937 rng(4005u);
    BracketContext ctx(2, 1);  // per-coordinate shift 1
    for (int trial = 0; trial < 20; ++trial) {
        // One copy of x and otherwise y-only content: the x-degree sum of any
        // three arguments is at most 1, the shift exactly.
        std::vector<GenPolynomial> polys = {GenPolynomial::monomial({Rat(1), Rat(0)}, Rat(1))};
        for (int i = 0; i < 3; ++i) {
            GenPolynomial p(2);
            std::uniform_int_distribution<int> exponent(0, 4);
            std::uniform_int_distribution<int> coefficient(-5, 5);
            for (int t = 0; t < 2; ++t) {
                p.add_term({Rat(0), Rat(exponent(rng))}, Rat(coefficient(rng)));
            }
            polys.push_back(p);
        }
        const SpanBasis image = bracket_image(ctx, span_reduce(polys, 2));
        for (const GenPolynomial& value : image.elements()) {
            const DegreeProfile profile = degree_profile(value);
            REQUIRE(profile.per_coordinate[0].has_value());
            CHECK(*profile.per_coordinate[0] <= 0);
        }
    }
}

TEST_CASE("classification is stable under closure for single random tops") {
    std::mt19937 rng(4006u);
    BracketContext ctx(2, 1);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> pick(0, 2);
        const int which = pick(rng);
        Exponents top = {Rat(2 - which), Rat(which)};
        std::vector<GenPolynomial> generators = standard_monomials(ctx);
        generators.push_back(GenPolynomial::monomial(top, Rat(1)));
        const GrowthReport report = closure_iterate(ctx, generators);
        CHECK(report.status == GrowthReport::Status::Stabilized);
        const Classification verdict = classify(ctx, report.final_basis);
        CHECK(verdict.kind == Classification::Kind::Lonely);
        REQUIRE(verdict.top.has_value());
        CHECK(*verdict.top == GenPolynomial::monomial(top, Rat(1)));
    }
}

TEST_CASE("divergence witnesses advance degrees by the order each step") {
    BracketContext ctx(2, 2);
    const Exponents qs[] = {{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    const Exponents ps[] = {{Rat(3), Rat(0)}, {Rat(0), Rat(3)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    for (const Exponents& q : qs) {
        for (const Exponents& p : ps) {
            if (p == q) {
                continue;
            }
            const std::vector<WitnessStep> steps = divergence_witness(
                ctx, GenPolynomial::monomial(p, Rat(1)), GenPolynomial::monomial(q, Rat(1)), 6);
            REQUIRE(steps.size() == 7);
            for (std::size_t n = 0; n < steps.size(); ++n) {
                CHECK(steps[n].coefficient != 0);
                CHECK(total_of(steps[n].monomial.leading_exponents()) == Rat(3 + 2 * n));
            }
        }
    }
}
