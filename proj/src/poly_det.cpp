#include "shw/poly_det.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace shw {

PolyMatrix::PolyMatrix(std::size_t size, unsigned dimension)
    : size_(size), dimension_(dimension), cells_(size * size, GenPolynomial(dimension)) {
    if (size == 0) {
        throw std::invalid_argument("matrix size must be at least 1");
    }
}

GenPolynomial& PolyMatrix::at(std::size_t row, std::size_t col) {
    return cells_.at(row * size_ + col);
}

const GenPolynomial& PolyMatrix::at(std::size_t row, std::size_t col) const {
    return cells_.at(row * size_ + col);
}

GenPolynomial bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    // Clear rational coefficient denominators column by column; the
    // determinant scales back by the product of the clearing factors, and the
    // elimination then stays inside integer-coefficient polynomials.
    Int scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
        Int column_lcm = 1;
        for (std::size_t r = 0; r < n; ++r) {
            const GenPolynomial& cell = m.at(r, c);
            if (!cell.all_natural_exponents()) {
                throw std::domain_error(
                    "fraction-free elimination requires natural exponents");
            }
            for (const auto& [exponents, coefficient] : cell.terms()) {
                (void)exponents;
                column_lcm = boost::multiprecision::lcm(
                    column_lcm, boost::multiprecision::denominator(coefficient));
            }
        }
        if (column_lcm != 1) {
            for (std::size_t r = 0; r < n; ++r) {
                m.at(r, c) *= Rat(column_lcm);
            }
            scale *= column_lcm;
        }
    }

    int sign = 1;
    GenPolynomial previous_pivot = GenPolynomial::constant(m.dimension(), 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t pivot_row = step;
        while (pivot_row < n && m.at(pivot_row, step).is_zero()) {
            ++pivot_row;
        }
        if (pivot_row == n) {
            return GenPolynomial(m.dimension());
        }
        if (pivot_row != step) {
            for (std::size_t c = step; c < n; ++c) {
                std::swap(m.at(step, c), m.at(pivot_row, c));
            }
            sign = -sign;
        }
        const GenPolynomial pivot = m.at(step, step);
        for (std::size_t r = step + 1; r < n; ++r) {
            for (std::size_t c = step + 1; c < n; ++c) {
                // Sylvester's identity: the combination below is an exact
                // multiple of the previous pivot.
                GenPolynomial updated =
                    m.at(r, c) * pivot - m.at(r, step) * m.at(step, c);
                m.at(r, c) = updated.is_zero()
                                 ? std::move(updated)
                                 : exact_quotient(updated, previous_pivot);
            }
            m.at(r, step) = GenPolynomial(m.dimension());
        }
        previous_pivot = pivot;
    }
    GenPolynomial det = m.at(n - 1, n - 1);
    if (sign < 0) {
        det *= Rat(-1);
    }
    if (scale != 1) {
        det *= Rat(1, scale);
    }
    return det;
}

GenPolynomial cofactor_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n > 64) {
        throw std::invalid_argument("cofactor expansion supports at most 64 columns");
    }
    // Minors over the row prefix 0..r-1 and every r-subset of columns; each
    // minor feeds all of its supersets, which is Laplace expansion with the
    // shared subexpansions computed once.
    std::unordered_map<std::uint64_t, GenPolynomial> level;
    level.emplace(0, GenPolynomial::constant(m.dimension(), 1));
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<std::uint64_t, GenPolynomial> next;
        next.reserve(level.size() * (n - r));
        for (const auto& [mask, minor] : level) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if (mask & bit) {
                    continue;
                }
                const GenPolynomial& entry = m.at(r, c);
                if (entry.is_zero()) {
                    continue;
                }
                const int position = __builtin_popcountll(mask & (bit - 1));
                const bool negate = ((static_cast<int>(r) + position) % 2) != 0;
                GenPolynomial contribution = minor * entry;
                if (negate) {
                    contribution *= Rat(-1);
                }
                auto [it, inserted] =
                    next.try_emplace(mask | bit, std::move(contribution));
                if (!inserted) {
                    it->second += contribution;
                    if (it->second.is_zero()) {
                        next.erase(it);
                    }
                }
            }
        }
        level = std::move(next);
    }
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const auto it = level.find(full);
    return it == level.end() ? GenPolynomial(m.dimension()) : it->second;
}

}  // namespace shw
