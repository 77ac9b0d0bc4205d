#include "shw/closed_forms.hpp"

#include "shw/vandermonde.hpp"

#include <stdexcept>

namespace shw {

namespace {

void require_natural_monomial(const BracketContext& ctx, const Exponents& a, const char* what) {
    if (a.size() != ctx.dimension()) {
        throw std::invalid_argument(std::string(what) + " has the wrong dimension");
    }
    if (!all_natural(a)) {
        throw std::invalid_argument(std::string(what) + " requires natural exponents");
    }
}

// (-1)^(k - r_j) / (k - r_j)! * prod_{l = r_j + 1 .. k} (deg - l)
Rat outer_structure_factor(const BracketContext& ctx, const MultiIndex& row, const Rat& deg) {
    const unsigned r = order_of(row);
    const unsigned k = ctx.order();
    Rat factor = Rat(1, factorial(k - r));
    if ((k - r) % 2 != 0) {
        factor = -factor;
    }
    for (unsigned ell = r + 1; ell <= k && factor != 0; ++ell) {
        factor *= deg - ell;
    }
    return factor;
}

}  // namespace

GenPolynomial lonely_structure_bracket(const BracketContext& ctx, std::size_t j,
                                       const Exponents& a) {
    if (j < 1 || j > ctx.arity()) {
        throw std::out_of_range("slot index must lie in 1.." + std::to_string(ctx.arity()));
    }
    require_natural_monomial(ctx, a, "the replacing monomial");
    const MultiIndex& row = ctx.row(j - 1);
    Rat coefficient = outer_structure_factor(ctx, row, total_of(a));
    for (std::size_t i = 0; i < row.size() && coefficient != 0; ++i) {
        coefficient *= falling_factorial(a[i], row[i]);
    }
    if (coefficient == 0) {
        return GenPolynomial(ctx.dimension());
    }
    return GenPolynomial::monomial(subtract(a, to_exponents(row)), coefficient);
}

GenPolynomial lonely_structure_bracket_differential(const BracketContext& ctx, std::size_t j,
                                                    const GenPolynomial& a) {
    if (j < 1 || j > ctx.arity()) {
        throw std::out_of_range("slot index must lie in 1.." + std::to_string(ctx.arity()));
    }
    if (!a.is_monomial() || !a.all_natural_exponents()) {
        throw std::invalid_argument("the replacing argument must be a natural monomial");
    }
    const MultiIndex& row = ctx.row(j - 1);
    const Rat factor = outer_structure_factor(ctx, row, total_of(a.leading_exponents()));
    return derive(a, row) * factor;
}

MonomialValue golden_bracket(const BracketContext& ctx, const Exponents& p_exps,
                             const Exponents& q_exps) {
    require_natural_monomial(ctx, p_exps, "p");
    require_natural_monomial(ctx, q_exps, "q");
    const unsigned k = ctx.order();
    const Rat deg_p = total_of(p_exps);
    const Rat deg_q = total_of(q_exps);
    Rat coefficient = Rat(1, factorial(k) * factorial(k - 1));
    for (unsigned ell = 2; ell <= k && coefficient != 0; ++ell) {
        coefficient *= (deg_p - ell) * (deg_q - ell);
    }
    coefficient *= (deg_p - 1) * q_exps[0] - (deg_q - 1) * p_exps[0];
    MonomialValue out;
    out.coefficient = coefficient;
    if (coefficient != 0) {
        Exponents sum = add(p_exps, q_exps);
        sum[0] -= 1;
        out.exponents = std::move(sum);
    }
    return out;
}

Rat witt_shift(const BracketContext& ctx) {
    const Rat n(Int(ctx.arity()));
    return Rat(ctx.order(), ctx.dimension() + 1) * n / (n - 1);
}

GenPolynomial witt_generator(const BracketContext& ctx, const Exponents& index) {
    if (index.size() != ctx.dimension()) {
        throw std::invalid_argument("index tuple length differs from the context dimension");
    }
    const Rat s = witt_shift(ctx);
    Exponents exponents(index);
    for (Rat& e : exponents) {
        e += s;
    }
    return GenPolynomial::monomial(std::move(exponents), Rat(1));
}

WittBracket witt_bracket(const BracketContext& ctx, const std::vector<Exponents>& indices) {
    WittBracket out;
    out.omega = van_det(ctx, indices);
    out.index_sum = Exponents(ctx.dimension(), Rat(0));
    for (const Exponents& index : indices) {
        for (std::size_t i = 0; i < out.index_sum.size(); ++i) {
            out.index_sum[i] += index[i];
        }
    }
    return out;
}

}  // namespace shw
