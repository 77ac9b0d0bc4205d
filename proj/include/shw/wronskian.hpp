// The complete Wronskian N-ary bracket: assembly of the derivative matrix and
// exact evaluation of its determinant, plus the monomial fast path through the
// generalized Vandermonde coefficient.
#pragma once

#include "shw/context.hpp"
#include "shw/poly_det.hpp"

#include <vector>

namespace shw {

enum class BracketMode {
    Auto,          // cofactor for N <= 4, fraction-free beyond
    FractionFree,  // Bareiss over the polynomial ring
    Cofactor,      // memoized Laplace expansion (the oracle path)
};

// entry(j, n) = derivative of args[n] by row j; row 0 is the argument list.
PolyMatrix wronskian_matrix(const BracketContext& ctx, const std::vector<GenPolynomial>& args);

// Exact determinant of the Wronskian matrix. Arguments with non-natural
// exponents always take the cofactor path: fraction-free elimination divides
// in the natural-exponent subring only, so a FractionFree request falls back
// (documented override).
GenPolynomial bracket(const BracketContext& ctx, const std::vector<GenPolynomial>& args,
                      BracketMode mode = BracketMode::Auto);

// Bracket of the monic monomials x^{t} for the given power tuples: the
// coefficient is the generalized Vandermonde determinant of the tuples, and
// the exponent is their sum shifted down by kN/(d+1) per coordinate (absent
// when the coefficient vanishes).
MonomialValue bracket_monomial(const BracketContext& ctx, const std::vector<Exponents>& tuples);

}  // namespace shw
