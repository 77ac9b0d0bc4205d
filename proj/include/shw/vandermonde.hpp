// Generalized Vandermonde determinants of power d-tuples, the equivalent
// quasi-triangular (falling-factorial) form, sufficient vanishing
// certificates, and the fully factored one-variable product formula.
#pragma once

#include "shw/context.hpp"
#include "shw/numeric_det.hpp"

#include <cstddef>
#include <vector>

namespace shw {

// Determinant of the N x N number matrix with entry(j, n) = prod_i
// (t_n^i)^(r_j^i); the first row is all ones (0^0 = 1). Tuples may have
// rational entries.
Rat van_det(const BracketContext& ctx, const std::vector<Exponents>& tuples,
            DetMode mode = DetMode::Auto);

// Determinant of the falling-factorial matrix with entry(j, n) = prod_i
// t_n^i (t_n^i - 1) ... (t_n^i - r_j^i + 1); always equals van_det.
Rat quasi_triangular_det(const BracketContext& ctx, const std::vector<Exponents>& tuples,
                         DetMode mode = DetMode::Auto);

struct VanishingCertificate {
    enum class Kind {
        DuplicateColumns,    // tuples `first` and `second` coincide
        ConstantCoordinate,  // every tuple shares the same value in `coordinate`
        DeficientDegree,     // coordinate degree sum below the shift k N/(d+1)
        NoneFound,           // the determinant may still vanish
    };
    Kind kind = Kind::NoneFound;
    std::size_t first = 0;   // 0-based tuple positions (DuplicateColumns)
    std::size_t second = 0;
    unsigned coordinate = 0; // 0-based (ConstantCoordinate, DeficientDegree)
};

// Checks the sufficient vanishing conditions in order: duplicates, constant
// coordinate, deficient degree. The degree-sum condition applies only to
// all-natural tuples, so an all-zero coordinate on natural input is reported
// as a deficiency (it always is one); any certificate implies van_det = 0.
VanishingCertificate vanishing_certificate(const BracketContext& ctx,
                                           const std::vector<Exponents>& tuples);

// prod_{i<j} (m_j - m_i): the factored form of the one-variable Vandermonde
// determinant with exponent rows 0..N-1.
Rat ordinary_vandermonde_factored(const std::vector<Rat>& ms);

}  // namespace shw
