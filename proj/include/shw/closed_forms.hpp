// Factored closed forms for the bracket's structure constants: the
// single-replacement formula (and its differential-operator variant), the
// two-replacement formula, and the shifted-monomial commutation relations
// with their index shift.
#pragma once

#include "shw/context.hpp"

#include <cstddef>
#include <vector>

namespace shw {

// Bracket of the standard monomial list with slot j (1-based) replaced by the
// monic monomial x^a, evaluated through the factored formula
//   (-1)^(k-r_j) / (k-r_j)! * prod_i ff(a_i, r_j^i) * prod_{l=r_j+1..k} (deg a - l)
// times x^(a - r_j), where ff is the falling factorial. Requires natural a;
// throws std::out_of_range for an invalid slot.
GenPolynomial lonely_structure_bracket(const BracketContext& ctx, std::size_t j,
                                       const Exponents& a);

// The same value written through the row-j derivative applied to a monomial
// argument; kept as an independently computed cross-check form.
GenPolynomial lonely_structure_bracket_differential(const BracketContext& ctx, std::size_t j,
                                                    const GenPolynomial& a);

// Bracket of (q, p, standard rows 3..N) for monic monomials p = x^{p_exps}
// (replacing the slot of x^1) and q = x^{q_exps} (replacing the slot of 1):
//   1/(k! (k-1)!) * prod_{l=2..k} (deg p - l)(deg q - l)
//                 * ((deg p - 1) q_1 - (deg q - 1) p_1)
// times x^(p + q - e_1). Requires natural exponent vectors.
MonomialValue golden_bracket(const BracketContext& ctx, const Exponents& p_exps,
                             const Exponents& q_exps);

// s = k/(d+1) * N/(N-1); in general not an integer.
Rat witt_shift(const BracketContext& ctx);

// The generator a_i = x^(i + s*1) attached to a rational index d-tuple.
GenPolynomial witt_generator(const BracketContext& ctx, const Exponents& index);

struct WittBracket {
    Rat omega;           // generalized Vandermonde determinant of the indices
    Exponents index_sum; // componentwise sum; the bracket is omega * a_{sum}
};

// [a_{i_1}, ..., a_{i_N}] = omega * a_{i_1 + ... + i_N}; omega equals the
// determinant of the unshifted tuples by translation invariance.
WittBracket witt_bracket(const BracketContext& ctx, const std::vector<Exponents>& indices);

}  // namespace shw
