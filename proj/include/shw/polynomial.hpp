// Sparse exact polynomials: finite sums of rational coefficients times power
// d-tuples, stored in canonical term order. Exponents may be any rationals, so
// Laurent and fractional-power monomials are first-class values; differentiation
// and exact division are provided where they are defined.
#pragma once

#include "shw/exponents.hpp"

#include <map>
#include <optional>
#include <vector>

namespace shw {

class GenPolynomial {
public:
    using TermMap = std::map<Exponents, Rat, TermOrder>;

    // The zero polynomial in `dimension` variables.
    explicit GenPolynomial(unsigned dimension = 1);

    static GenPolynomial constant(unsigned dimension, Rat value);
    static GenPolynomial monomial(Exponents exponents, Rat coefficient);

    unsigned dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    // Highest term in the canonical order; both throw std::logic_error on the
    // zero polynomial.
    const Exponents& leading_exponents() const;
    const Rat& leading_coefficient() const;

    bool all_natural_exponents() const;

    // Coefficient of x^exponents, zero when the term is absent.
    Rat coefficient_of(const Exponents& exponents) const;

    // Adds coefficient * x^exponents, merging with an existing term; terms
    // that cancel to zero are erased.
    void add_term(const Exponents& exponents, const Rat& coefficient);

    GenPolynomial operator-() const;
    GenPolynomial& operator+=(const GenPolynomial& rhs);
    GenPolynomial& operator-=(const GenPolynomial& rhs);
    GenPolynomial& operator*=(const Rat& scalar);

    friend GenPolynomial operator+(GenPolynomial a, const GenPolynomial& b) { return a += b; }
    friend GenPolynomial operator-(GenPolynomial a, const GenPolynomial& b) { return a -= b; }
    friend GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b);
    friend GenPolynomial operator*(GenPolynomial p, const Rat& scalar) { return p *= scalar; }
    friend GenPolynomial operator*(const Rat& scalar, GenPolynomial p) { return p *= scalar; }
    friend bool operator==(const GenPolynomial& a, const GenPolynomial& b) {
        return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
    }

private:
    unsigned dimension_;
    TermMap terms_;
};

// Partial derivative with per-coordinate orders given by r. A term x^n picks
// up the factor prod_i n_i (n_i - 1) ... (n_i - r_i + 1) and is dropped
// entirely when that factor vanishes (no ghost terms for natural exponents);
// rational and negative exponents differentiate formally.
GenPolynomial derive(const GenPolynomial& p, const MultiIndex& r);

struct DegreeProfile {
    std::optional<Rat> total;                       // empty for the zero polynomial
    std::vector<std::optional<Rat>> per_coordinate;
};

// Per-coordinate degree = max exponent of that coordinate over terms; total
// degree = max term norm.
DegreeProfile degree_profile(const GenPolynomial& p);

// Quotient a / b when it divides exactly within the natural-exponent subring;
// throws std::domain_error otherwise. Backs the fraction-free elimination.
GenPolynomial exact_quotient(const GenPolynomial& a, const GenPolynomial& b);

// coefficient * x^exponents, with the exponent reported as absent when the
// coefficient is zero; the return shape of the monomial-valued closed forms.
struct MonomialValue {
    Rat coefficient;
    std::optional<Exponents> exponents;

    GenPolynomial to_polynomial(unsigned dimension) const;
};

}  // namespace shw
