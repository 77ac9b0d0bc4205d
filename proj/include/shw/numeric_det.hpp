// Exact determinants of dense rational matrices: fraction-free Bareiss
// elimination over the integers after per-column denominator clearing, and a
// memoized cofactor expansion kept as an independent oracle.
#pragma once

#include "shw/rational.hpp"

#include <cstddef>
#include <vector>

namespace shw {

enum class DetMode {
    Auto,          // cofactor for n <= 5, fraction-free beyond
    FractionFree,  // Bareiss elimination
    Cofactor,      // Laplace expansion, memoized over column subsets
};

// `cells` is row-major of length n*n.
Rat rational_determinant(const std::vector<Rat>& cells, std::size_t n,
                         DetMode mode = DetMode::Auto);

}  // namespace shw
