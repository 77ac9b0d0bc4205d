#include "shw/span.hpp"

#include <stdexcept>
#include <utility>

namespace shw {

SpanBasis::SpanBasis(unsigned dimension) : dimension_(dimension) {}

std::vector<GenPolynomial> SpanBasis::elements() const {
    std::vector<GenPolynomial> out;
    out.reserve(rows_.size());
    for (const auto& [lead, poly] : rows_) {
        out.push_back(poly);
    }
    return out;
}

GenPolynomial SpanBasis::reduce(GenPolynomial p) const {
    if (p.dimension() != dimension_) {
        throw std::invalid_argument("polynomial dimension differs from the span dimension");
    }
    // Eliminate the greatest term whose monomial leads some basis row.  Each
    // elimination only introduces strictly smaller monomials, and all monomials
    // live in the finite union of the supports involved, so this terminates.
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& [exponents, coefficient] : p.terms()) {
            auto row = rows_.find(exponents);
            if (row != rows_.end()) {
                p -= row->second * coefficient;
                changed = true;
                break;
            }
        }
    }
    return p;
}

bool SpanBasis::insert(GenPolynomial p) {
    GenPolynomial remainder = reduce(std::move(p));
    if (remainder.is_zero()) {
        return false;
    }
    remainder *= Rat(1) / remainder.leading_coefficient();
    const Exponents lead = remainder.leading_exponents();
    // Keep older rows reduced against the newcomer so the echelon form stays
    // canonical: no row may contain another row's leading monomial.
    for (auto& [key, row] : rows_) {
        const Rat coefficient = row.coefficient_of(lead);
        if (coefficient != 0) {
            row -= remainder * coefficient;
        }
    }
    rows_.emplace(lead, std::move(remainder));
    return true;
}

std::vector<Exponents> SpanBasis::support() const {
    std::map<Exponents, bool, TermOrder> seen;
    for (const auto& [lead, poly] : rows_) {
        for (const auto& [exponents, coefficient] : poly.terms()) {
            seen.emplace(exponents, true);
        }
    }
    std::vector<Exponents> out;
    out.reserve(seen.size());
    for (const auto& [exponents, flag] : seen) {
        out.push_back(exponents);
    }
    return out;
}

SpanBasis span_reduce(const std::vector<GenPolynomial>& polys, unsigned dimension) {
    SpanBasis basis(dimension);
    for (const GenPolynomial& p : polys) {
        basis.insert(p);
    }
    return basis;
}

}  // namespace shw
