#include "shw/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace shw {

namespace {

void require_dimension(unsigned dimension) {
    if (dimension == 0) {
        throw std::invalid_argument("polynomial dimension must be at least 1");
    }
}

void require_same_dimension(const GenPolynomial& a, const GenPolynomial& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("polynomial dimensions differ");
    }
}

}  // namespace

GenPolynomial::GenPolynomial(unsigned dimension) : dimension_(dimension) {
    require_dimension(dimension);
}

GenPolynomial GenPolynomial::constant(unsigned dimension, Rat value) {
    GenPolynomial p(dimension);
    if (value != 0) {
        p.terms_.emplace(Exponents(dimension, Rat(0)), std::move(value));
    }
    return p;
}

GenPolynomial GenPolynomial::monomial(Exponents exponents, Rat coefficient) {
    if (exponents.empty()) {
        throw std::invalid_argument("monomial exponent vector is empty");
    }
    GenPolynomial p(static_cast<unsigned>(exponents.size()));
    if (coefficient != 0) {
        p.terms_.emplace(std::move(exponents), std::move(coefficient));
    }
    return p;
}

bool GenPolynomial::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() != 1) {
        return false;
    }
    for (const Rat& e : terms_.begin()->first) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

const Exponents& GenPolynomial::leading_exponents() const {
    if (terms_.empty()) {
        throw std::logic_error("zero polynomial has no leading term");
    }
    return terms_.begin()->first;
}

const Rat& GenPolynomial::leading_coefficient() const {
    if (terms_.empty()) {
        throw std::logic_error("zero polynomial has no leading term");
    }
    return terms_.begin()->second;
}

bool GenPolynomial::all_natural_exponents() const {
    for (const auto& [exponents, coefficient] : terms_) {
        (void)coefficient;
        if (!all_natural(exponents)) {
            return false;
        }
    }
    return true;
}

Rat GenPolynomial::coefficient_of(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GenPolynomial::add_term(const Exponents& exponents, const Rat& coefficient) {
    if (exponents.size() != dimension_) {
        throw std::invalid_argument("term exponent length differs from polynomial dimension");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GenPolynomial GenPolynomial::operator-() const {
    GenPolynomial out(dimension_);
    for (const auto& [exponents, coefficient] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), exponents, -coefficient);
    }
    return out;
}

GenPolynomial& GenPolynomial::operator+=(const GenPolynomial& rhs) {
    require_same_dimension(*this, rhs);
    for (const auto& [exponents, coefficient] : rhs.terms_) {
        add_term(exponents, coefficient);
    }
    return *this;
}

GenPolynomial& GenPolynomial::operator-=(const GenPolynomial& rhs) {
    require_same_dimension(*this, rhs);
    for (const auto& [exponents, coefficient] : rhs.terms_) {
        add_term(exponents, -coefficient);
    }
    return *this;
}

GenPolynomial& GenPolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exponents, coefficient] : terms_) {
        (void)exponents;
        coefficient *= scalar;
    }
    return *this;
}

GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b) {
    require_same_dimension(a, b);
    GenPolynomial out(a.dimension());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(add(ea, eb), ca * cb);
        }
    }
    return out;
}

GenPolynomial derive(const GenPolynomial& p, const MultiIndex& r) {
    if (r.size() != p.dimension()) {
        throw std::invalid_argument("derivative multi-index length differs from dimension");
    }
    GenPolynomial out(p.dimension());
    for (const auto& [exponents, coefficient] : p.terms()) {
        Rat factor = 1;
        for (std::size_t i = 0; i < r.size() && factor != 0; ++i) {
            factor *= falling_factorial(exponents[i], r[i]);
        }
        if (factor == 0) {
            continue;
        }
        Exponents shifted(exponents);
        for (std::size_t i = 0; i < r.size(); ++i) {
            shifted[i] -= r[i];
        }
        out.add_term(shifted, coefficient * factor);
    }
    return out;
}

DegreeProfile degree_profile(const GenPolynomial& p) {
    DegreeProfile profile;
    profile.per_coordinate.resize(p.dimension());
    if (p.is_zero()) {
        return profile;
    }
    // The canonical order is graded, so the leading term carries the maximal norm.
    profile.total = total_of(p.leading_exponents());
    for (const auto& [exponents, coefficient] : p.terms()) {
        (void)coefficient;
        for (unsigned i = 0; i < p.dimension(); ++i) {
            auto& best = profile.per_coordinate[i];
            if (!best || exponents[i] > *best) {
                best = exponents[i];
            }
        }
    }
    return profile;
}

GenPolynomial exact_quotient(const GenPolynomial& a, const GenPolynomial& b) {
    require_same_dimension(a, b);
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (!a.all_natural_exponents() || !b.all_natural_exponents()) {
        throw std::domain_error("exact division requires natural exponents");
    }
    GenPolynomial quotient(a.dimension());
    GenPolynomial remainder = a;
    while (!remainder.is_zero()) {
        Exponents step = subtract(remainder.leading_exponents(), b.leading_exponents());
        if (!all_natural(step)) {
            throw std::domain_error("polynomial division is not exact");
        }
        const Rat coeff = remainder.leading_coefficient() / b.leading_coefficient();
        quotient.add_term(step, coeff);
        // remainder -= coeff * x^step * b; the leading term cancels, and the
        // graded order is compatible with multiplication, so the leading term
        // strictly decreases and the loop terminates.
        for (const auto& [eb, cb] : b.terms()) {
            remainder.add_term(add(step, eb), -(coeff * cb));
        }
    }
    return quotient;
}

GenPolynomial MonomialValue::to_polynomial(unsigned dimension) const {
    if (coefficient == 0 || !exponents) {
        return GenPolynomial(dimension);
    }
    return GenPolynomial::monomial(*exponents, coefficient);
}

}  // namespace shw
