// Power d-tuples (exponent vectors with rational entries), derivative
// multi-indices, and the canonical term order shared by polynomial storage,
// printing, and span reduction.
#pragma once

#include "shw/rational.hpp"

#include <vector>

namespace shw {

// One power d-tuple: entry i is the exponent of variable i. Entries may be
// negative or fractional (Laurent and generalized monomials).
using Exponents = std::vector<Rat>;

// A derivative multi-index: entry i is the partial-derivative order in
// variable i.
using MultiIndex = std::vector<unsigned>;

Rat total_of(const Exponents& e);        // sum of entries
unsigned order_of(const MultiIndex& r);  // sum of entries

Exponents to_exponents(const MultiIndex& r);
Exponents add(const Exponents& a, const Exponents& b);
Exponents subtract(const Exponents& a, const Exponents& b);
bool all_natural(const Exponents& e);

// r! = prod_i (r_i)!
Int multi_factorial(const MultiIndex& r);

// Canonical order: larger total degree first; within a degree tie, the vector
// with the larger entry at the first differing coordinate comes first. For two
// variables the induced listing is x^2, x*y, y^2, x, y, 1.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

}  // namespace shw
