#include "shw/wronskian.hpp"

#include "shw/vandermonde.hpp"

#include <stdexcept>

namespace shw {

namespace {

void require_arguments(const BracketContext& ctx, const std::vector<GenPolynomial>& args) {
    if (args.size() != ctx.arity()) {
        throw std::invalid_argument("bracket expects exactly " + std::to_string(ctx.arity()) +
                                    " arguments, got " + std::to_string(args.size()));
    }
    for (const GenPolynomial& arg : args) {
        if (arg.dimension() != ctx.dimension()) {
            throw std::invalid_argument("bracket argument dimension differs from the context");
        }
    }
}

}  // namespace

PolyMatrix wronskian_matrix(const BracketContext& ctx, const std::vector<GenPolynomial>& args) {
    require_arguments(ctx, args);
    const std::size_t n = ctx.arity();
    PolyMatrix m(n, ctx.dimension());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < n; ++c) {
            m.at(j, c) = derive(args[c], ctx.row(j));
        }
    }
    return m;
}

GenPolynomial bracket(const BracketContext& ctx, const std::vector<GenPolynomial>& args,
                      BracketMode mode) {
    require_arguments(ctx, args);
    bool natural = true;
    for (const GenPolynomial& arg : args) {
        if (!arg.all_natural_exponents()) {
            natural = false;
            break;
        }
    }
    if (!natural) {
        mode = BracketMode::Cofactor;
    } else if (mode == BracketMode::Auto) {
        mode = ctx.arity() <= 4 ? BracketMode::Cofactor : BracketMode::FractionFree;
    }
    PolyMatrix m = wronskian_matrix(ctx, args);
    return mode == BracketMode::FractionFree ? bareiss_determinant(std::move(m))
                                             : cofactor_determinant(m);
}

MonomialValue bracket_monomial(const BracketContext& ctx, const std::vector<Exponents>& tuples) {
    MonomialValue out;
    out.coefficient = van_det(ctx, tuples);
    if (out.coefficient == 0) {
        return out;
    }
    Exponents sum(ctx.dimension(), Rat(0));
    for (const Exponents& t : tuples) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += t[i];
        }
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] -= ctx.per_coordinate_shift();
    }
    out.exponents = std::move(sum);
    return out;
}

}  // namespace shw
