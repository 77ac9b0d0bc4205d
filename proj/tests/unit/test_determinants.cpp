// Exact determinants: rational matrices through both algorithms, and
// polynomial matrices through fraction-free elimination and cofactor
// expansion.
#include "doctest.h"

#include "shw/numeric_det.hpp"
#include "shw/parser.hpp"
#include "shw/poly_det.hpp"

using namespace shw;

namespace {

Rat det(std::vector<Rat> cells, std::size_t n, DetMode mode) {
    return rational_determinant(cells, n, mode);
}

PolyMatrix matrix2(const char* a, const char* b, const char* c, const char* d, unsigned dim) {
    PolyMatrix m(2, dim);
    m.at(0, 0) = parse_poly(a, dim);
    m.at(0, 1) = parse_poly(b, dim);
    m.at(1, 0) = parse_poly(c, dim);
    m.at(1, 1) = parse_poly(d, dim);
    return m;
}

}  // namespace

TEST_CASE("rational determinants of pinned matrices") {
    for (DetMode mode : {DetMode::Auto, DetMode::FractionFree, DetMode::Cofactor}) {
        CAPTURE(static_cast<int>(mode));
        CHECK(det({Rat(5)}, 1, mode) == 5);
        CHECK(det({Rat(1), Rat(2), Rat(3), Rat(4)}, 2, mode) == -2);
        CHECK(det({Rat(2), Rat(0), Rat(0), Rat(0), Rat(3), Rat(0), Rat(0), Rat(0), Rat(5)}, 3,
                  mode) == 30);
        // Repeated rows collapse to zero.
        CHECK(det({Rat(1), Rat(2), Rat(1), Rat(2)}, 2, mode) == 0);
        // 4x4 Hilbert matrix: entries 1/(i+j+1), determinant 1/6048000.
        std::vector<Rat> hilbert;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                hilbert.push_back(Rat(1, i + j + 1));
            }
        }
        CHECK(det(hilbert, 4, mode) == Rat(1, 6048000));
    }
}

TEST_CASE("rational determinant algorithms agree on a deterministic family") {
    // A full 6x6 with entries (i*j - 3i + 2j + 1)/(1 + ((i+j) mod 3)).
    std::vector<Rat> cells;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            cells.push_back(Rat(i * j - 3 * i + 2 * j + 1, 1 + (i + j) % 3));
        }
    }
    const Rat reference = det(cells, 6, DetMode::Cofactor);
    CHECK(det(cells, 6, DetMode::FractionFree) == reference);
    CHECK(det(cells, 6, DetMode::Auto) == reference);
}

TEST_CASE("polynomial matrix shape and access") {
    PolyMatrix m(2, 2);
    CHECK(m.size() == 2);
    CHECK(m.dimension() == 2);
    CHECK(m.at(1, 1).is_zero());
    m.at(0, 1) = parse_poly("x", 2);
    CHECK(format_poly(m.at(0, 1)) == "x");
}

TEST_CASE("polynomial determinants of pinned matrices") {
    // det [[x, y], [1, x]] = x^2 - y.
    const PolyMatrix m = matrix2("x", "y", "1", "x", 2);
    const GenPolynomial expected = parse_poly("x^2 - y", 2);
    CHECK(bareiss_determinant(m) == expected);
    CHECK(cofactor_determinant(m) == expected);

    // Triangular: determinant is the diagonal product.
    PolyMatrix t(3, 1);
    t.at(0, 0) = parse_poly("x", 1);
    t.at(0, 1) = parse_poly("x^5 + 1", 1);
    t.at(0, 2) = parse_poly("2", 1);
    t.at(1, 1) = parse_poly("x - 1", 1);
    t.at(1, 2) = parse_poly("x^2", 1);
    t.at(2, 2) = parse_poly("x + 1", 1);
    const GenPolynomial diag = parse_poly("x^3 - x", 1);
    CHECK(bareiss_determinant(t) == diag);
    CHECK(cofactor_determinant(t) == diag);

    // A repeated column collapses to zero.
    const PolyMatrix dup = matrix2("x", "x", "y^2", "y^2", 2);
    CHECK(bareiss_determinant(dup).is_zero());
    CHECK(cofactor_determinant(dup).is_zero());
}

TEST_CASE("polynomial determinant algorithms agree on a dense 4x4 family") {
    // Entry (i, j) = (x + i*y)^j with the convention entry(i, 0) = 1: a
    // polynomial Vandermonde whose determinant both algorithms must share.
    PolyMatrix m(4, 2);
    const GenPolynomial x = parse_poly("x", 2);
    const GenPolynomial y = parse_poly("y", 2);
    for (int i = 0; i < 4; ++i) {
        GenPolynomial base = x + y * Rat(i);
        GenPolynomial power = GenPolynomial::constant(2, Rat(1));
        for (int j = 0; j < 4; ++j) {
            m.at(i, j) = power;
            power = power * base;
        }
    }
    const GenPolynomial ff = bareiss_determinant(m);
    CHECK(ff == cofactor_determinant(m));
    // Vandermonde factorization: product of (j - i) y over i < j = 12 y^6.
    CHECK(ff == parse_poly("12*y^6", 2));
}

TEST_CASE("fraction-free elimination refuses non-natural exponents") {
    const PolyMatrix fractional = matrix2("x^(1/2)", "1", "1", "x", 1);
    CHECK_THROWS_AS(bareiss_determinant(fractional), std::domain_error);
    // The cofactor path handles the same matrix: x^(3/2) - 1.
    CHECK(cofactor_determinant(fractional) == parse_poly("x^(3/2) - 1", 1));
}
