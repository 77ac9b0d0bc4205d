// Randomized laws of the scalar helpers, the polynomial ring, differentiation,
// and the text round-trip.
#include "doctest.h"

#include "shw/parser.hpp"
#include "shw/polynomial.hpp"
#include "support/generators.hpp"

#include <random>

using namespace shw;
using shw::testing::random_nonzero_poly;
using shw::testing::random_poly;
using shw::testing::random_rational;

TEST_CASE("combinatorial helper recurrences") {
    std::mt19937 rng(1001u);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<unsigned> small(0, 12);
        const unsigned n = small(rng) + 1;
        const unsigned k = small(rng);
        CHECK(binomial(n, k + 1) == binomial(n - 1, k + 1) + binomial(n - 1, k));
        const Rat x = random_rational(rng, 8, 5);
        const unsigned r = small(rng) % 6;
        CHECK(falling_factorial(x, r + 1) == falling_factorial(x, r) * (x - r));
        CHECK(pow_rational(x, 3) == x * x * x);
        CHECK(pow_rational(x, r) * pow_rational(x, r + 1) == pow_rational(x, 2 * r + 1));
    }
}

TEST_CASE("the polynomial ring laws hold on random values") {
    std::mt19937 rng(1002u);
    for (int trial = 0; trial < 120; ++trial) {
        const GenPolynomial p = random_poly(rng, 2, 4, 5, 6);
        const GenPolynomial q = random_poly(rng, 2, 4, 5, 6);
        const GenPolynomial r = random_poly(rng, 2, 4, 5, 6);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(p + GenPolynomial(2) == p);
        CHECK((p * Rat(0)).is_zero());
    }
}

TEST_CASE("differentiation: linearity, product rule, commuting partials") {
    std::mt19937 rng(1003u);
    for (int trial = 0; trial < 100; ++trial) {
        const GenPolynomial p = random_poly(rng, 2, 4, 5, 6);
        const GenPolynomial q = random_poly(rng, 2, 4, 5, 6);
        CHECK(derive(p + q, {1, 0}) == derive(p, {1, 0}) + derive(q, {1, 0}));
        CHECK(derive(p * q, {1, 0}) ==
              p * derive(q, {1, 0}) + q * derive(p, {1, 0}));
        CHECK(derive(derive(p, {1, 0}), {0, 1}) == derive(p, {1, 1}));
        CHECK(derive(derive(p, {0, 1}), {1, 0}) == derive(p, {1, 1}));
        // One-variable-at-a-time iteration matches the direct multi-index.
        CHECK(derive(derive(p, {1, 0}), {1, 0}) == derive(p, {2, 0}));
    }
}

TEST_CASE("exact division undoes multiplication") {
    std::mt19937 rng(1004u);
    for (int trial = 0; trial < 100; ++trial) {
        const GenPolynomial p = random_poly(rng, 2, 3, 4, 6);
        const GenPolynomial q = random_nonzero_poly(rng, 2, 3, 4, 6);
        CHECK(exact_quotient(p * q, q) == p);
    }
}

TEST_CASE("parse of format is the identity on random polynomials") {
    std::mt19937 rng(1005u);
    for (unsigned dimension = 1; dimension <= 3; ++dimension) {
        for (int trial = 0; trial < 60; ++trial) {
            const GenPolynomial p = random_poly(rng, dimension, 5, 6, 9);
            CHECK(parse_poly(format_poly(p), dimension) == p);
        }
    }
}

TEST_CASE("rational text round-trip on random values") {
    std::mt19937 rng(1006u);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat q = random_rational(rng, 1000, 997);
        CHECK(parse_rational(format_rational(q)) == q);
    }
}
