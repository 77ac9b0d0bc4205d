#include "shw/context.hpp"

#include <cassert>
#include <stdexcept>

namespace shw {

namespace {

void require_context_params(unsigned d, unsigned k) {
    if (d < 1 || k < 1) {
        throw std::invalid_argument("the bracket context requires d >= 1 and k >= 1");
    }
}

// Appends every multi-index of total order `remaining` over coordinates
// [position, d), with the current coordinate taking the largest share first.
void append_block(unsigned d, unsigned remaining, MultiIndex& current,
                  std::vector<MultiIndex>& out) {
    const std::size_t position = current.size();
    if (position + 1 == d) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned share = remaining; share != 0; --share) {
        current.push_back(share);
        append_block(d, remaining - share, current, out);
        current.pop_back();
    }
    current.push_back(0);
    append_block(d, remaining, current, out);
    current.pop_back();
}

}  // namespace

Int arity(unsigned d, unsigned k) {
    require_context_params(d, k);
    return binomial(d + k, k);
}

std::vector<MultiIndex> enumerate_rows(unsigned d, unsigned k) {
    require_context_params(d, k);
    std::vector<MultiIndex> rows;
    MultiIndex current;
    for (unsigned degree = 0; degree <= k; ++degree) {
        append_block(d, degree, current, rows);
    }
    return rows;
}

DegreeShift degree_shift(unsigned d, unsigned k) {
    const Int n = arity(d, k);
    const Int numerator = Int(k) * n;
    // k N is always divisible by d+1 (one of d+1 consecutive binomial shifts);
    // anything else would be an internal error.
    assert(numerator % (d + 1) == 0);
    DegreeShift shift;
    shift.per_coordinate = numerator / (d + 1);
    shift.total = shift.per_coordinate * d;
    return shift;
}

BracketContext::BracketContext(unsigned d, unsigned k) : d_(d), k_(k) {
    require_context_params(d, k);
    rows_ = enumerate_rows(d, k);
    assert(Int(rows_.size()) == shw::arity(d, k));
    const DegreeShift shift = degree_shift(d, k);
    shift_per_coordinate_ = Rat(shift.per_coordinate);
    shift_total_ = Rat(shift.total);
}

std::vector<GenPolynomial> standard_monomials(const BracketContext& ctx) {
    std::vector<GenPolynomial> monomials;
    monomials.reserve(ctx.arity());
    for (const MultiIndex& row : ctx.rows()) {
        monomials.push_back(
            GenPolynomial::monomial(to_exponents(row), Rat(1, multi_factorial(row))));
    }
    return monomials;
}

std::vector<GenPolynomial> standard_monomials_unnormalized(const BracketContext& ctx) {
    std::vector<GenPolynomial> monomials;
    monomials.reserve(ctx.arity());
    for (const MultiIndex& row : ctx.rows()) {
        monomials.push_back(GenPolynomial::monomial(to_exponents(row), Rat(1)));
    }
    return monomials;
}

}  // namespace shw
