// The bracket context: base dimension d, differential order k, the arity
// N = C(d+k, k), and the ordered derivative rows of the complete Wronskian
// determinant, together with the standard (divided-power) monomials and the
// degree-shift constants attached to them.
#pragma once

#include "shw/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace shw {

// N = C(d+k, k), exact.
Int arity(unsigned d, unsigned k);

// Every derivative multi-index of total order 0..k: degree blocks ascending;
// inside a block the first coordinate descends, then the second, and so on.
// (2,1) -> (0,0),(1,0),(0,1); (2,2) appends (2,0),(1,1),(0,2).
std::vector<MultiIndex> enumerate_rows(unsigned d, unsigned k);

struct DegreeShift {
    Int per_coordinate;  // k N / (d+1)
    Int total;           // k d N / (d+1)
};

// Both quotients are integral; non-integrality would be an internal error and
// is asserted.
DegreeShift degree_shift(unsigned d, unsigned k);

class BracketContext {
public:
    // Throws std::invalid_argument unless d >= 1 and k >= 1.
    BracketContext(unsigned d, unsigned k);

    unsigned dimension() const { return d_; }
    unsigned order() const { return k_; }
    std::size_t arity() const { return rows_.size(); }
    const std::vector<MultiIndex>& rows() const { return rows_; }
    const MultiIndex& row(std::size_t j) const { return rows_.at(j); }  // 0-based
    Rat per_coordinate_shift() const { return shift_per_coordinate_; }
    Rat total_shift() const { return shift_total_; }

private:
    unsigned d_;
    unsigned k_;
    std::vector<MultiIndex> rows_;
    Rat shift_per_coordinate_;
    Rat shift_total_;
};

// Entry j is x^{r_j} / r_j!, the unique monomial the row-j operator sends to 1;
// the bracket of the full list is 1.
std::vector<GenPolynomial> standard_monomials(const BracketContext& ctx);

// Entry j is the plain monomial x^{r_j} (no factorial normalization).
std::vector<GenPolynomial> standard_monomials_unnormalized(const BracketContext& ctx);

}  // namespace shw
