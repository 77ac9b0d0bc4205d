#include "shw/exponents.hpp"

#include <stdexcept>

namespace shw {

Rat total_of(const Exponents& e) {
    Rat sum = 0;
    for (const Rat& entry : e) {
        sum += entry;
    }
    return sum;
}

unsigned order_of(const MultiIndex& r) {
    unsigned sum = 0;
    for (unsigned entry : r) {
        sum += entry;
    }
    return sum;
}

Exponents to_exponents(const MultiIndex& r) {
    Exponents e;
    e.reserve(r.size());
    for (unsigned entry : r) {
        e.emplace_back(entry);
    }
    return e;
}

namespace {

void require_same_length(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponent vectors have different lengths");
    }
}

}  // namespace

Exponents add(const Exponents& a, const Exponents& b) {
    require_same_length(a, b);
    Exponents out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

Exponents subtract(const Exponents& a, const Exponents& b) {
    require_same_length(a, b);
    Exponents out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

bool all_natural(const Exponents& e) {
    for (const Rat& entry : e) {
        if (!is_natural(entry)) {
            return false;
        }
    }
    return true;
}

Int multi_factorial(const MultiIndex& r) {
    Int product = 1;
    for (unsigned entry : r) {
        product *= factorial(entry);
    }
    return product;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    const Rat na = total_of(a);
    const Rat nb = total_of(b);
    if (na != nb) {
        return na > nb;
    }
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] > b[i];
        }
    }
    return false;
}

}  // namespace shw
