// Square matrices of polynomials and their exact determinants: fraction-free
// Bareiss elimination over the polynomial ring (defined for natural-exponent
// entries) and a memoized cofactor expansion valid for arbitrary exponents.
#pragma once

#include "shw/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace shw {

class PolyMatrix {
public:
    PolyMatrix(std::size_t size, unsigned dimension);

    std::size_t size() const { return size_; }
    unsigned dimension() const { return dimension_; }

    GenPolynomial& at(std::size_t row, std::size_t col);
    const GenPolynomial& at(std::size_t row, std::size_t col) const;

private:
    std::size_t size_;
    unsigned dimension_;
    std::vector<GenPolynomial> cells_;
};

// Requires natural exponents throughout (the exact divisions live in that
// subring); throws std::domain_error otherwise. Rational coefficient
// denominators are cleared per column before elimination.
GenPolynomial bareiss_determinant(PolyMatrix m);

// Laplace expansion with minors memoized over (row prefix, column subset);
// algebraically the plain signed-product expansion.
GenPolynomial cofactor_determinant(const PolyMatrix& m);

}  // namespace shw
