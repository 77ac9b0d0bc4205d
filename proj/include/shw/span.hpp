// Exact linear algebra over the rationals for sets of polynomials.
//
// A SpanBasis keeps a reduced row-echelon basis with respect to the canonical
// monomial order: leading monomials are pairwise distinct, every leading
// coefficient is 1, and no basis element contains the leading monomial of
// another.  Membership tests, dimension counts and span unions all reduce to
// repeated leading-term elimination against this basis.
#pragma once

#include "shw/polynomial.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace shw {

class SpanBasis {
public:
    explicit SpanBasis(unsigned dimension);

    unsigned dimension() const { return dimension_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    // Basis elements in descending order of their leading monomials.
    std::vector<GenPolynomial> elements() const;

    // Remainder of p after elimination against the basis; zero iff p is in the span.
    GenPolynomial reduce(GenPolynomial p) const;

    bool contains(const GenPolynomial& p) const { return reduce(p).is_zero(); }

    // Adjoins p when it is independent of the current span; returns true if the
    // basis grew.  The stored representative is monic and fully inter-reduced.
    bool insert(GenPolynomial p);

    // Distinct exponent tuples appearing across the basis, in descending order.
    std::vector<Exponents> support() const;

private:
    unsigned dimension_;
    std::map<Exponents, GenPolynomial, TermOrder> rows_;
};

// Reduced basis of the span of an arbitrary polynomial list.
SpanBasis span_reduce(const std::vector<GenPolynomial>& polys, unsigned dimension);

}  // namespace shw
