#include "shw/numeric_det.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace shw {

namespace {

// Bareiss elimination: every intermediate value is a minor of the integer
// matrix, and the division by the previous pivot is exact.
Int integer_bareiss(std::vector<Int> m, std::size_t n) {
    int sign = 1;
    Int previous_pivot = 1;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        // First nonzero entry in the column, scanning downward from the diagonal.
        std::size_t pivot_row = step;
        while (pivot_row < n && m[pivot_row * n + step] == 0) {
            ++pivot_row;
        }
        if (pivot_row == n) {
            return 0;
        }
        if (pivot_row != step) {
            for (std::size_t c = step; c < n; ++c) {
                std::swap(m[step * n + c], m[pivot_row * n + c]);
            }
            sign = -sign;
        }
        const Int pivot = m[step * n + step];
        for (std::size_t r = step + 1; r < n; ++r) {
            for (std::size_t c = step + 1; c < n; ++c) {
                m[r * n + c] = (m[r * n + c] * pivot - m[r * n + step] * m[step * n + c]) /
                               previous_pivot;
            }
            m[r * n + step] = 0;
        }
        previous_pivot = pivot;
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

Rat bareiss_rational(const std::vector<Rat>& cells, std::size_t n) {
    // Clear denominators column by column so the elimination runs over the
    // integers; the determinant scales back by the product of the factors.
    std::vector<Int> m(n * n);
    Int scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
        Int column_lcm = 1;
        for (std::size_t r = 0; r < n; ++r) {
            column_lcm = boost::multiprecision::lcm(
                column_lcm, boost::multiprecision::denominator(cells[r * n + c]));
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Rat& value = cells[r * n + c];
            m[r * n + c] = boost::multiprecision::numerator(value) *
                           (column_lcm / boost::multiprecision::denominator(value));
        }
        scale *= column_lcm;
    }
    return Rat(integer_bareiss(std::move(m), n), scale);
}

// Laplace expansion built up one row at a time: minor(rows 0..r-1, columns S)
// for every r-subset S, each minor reused for all of its supersets.
Rat cofactor_rational(const std::vector<Rat>& cells, std::size_t n) {
    if (n > 64) {
        throw std::invalid_argument("cofactor expansion supports at most 64 columns");
    }
    std::unordered_map<std::uint64_t, Rat> level;
    level.emplace(0, Rat(1));
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<std::uint64_t, Rat> next;
        next.reserve(level.size() * (n - r));
        for (const auto& [mask, minor] : level) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if (mask & bit) {
                    continue;
                }
                const Rat& entry = cells[r * n + c];
                if (entry == 0) {
                    continue;
                }
                // Parity of (row index + position of c within the new subset).
                const int position =
                    __builtin_popcountll(mask & (bit - 1));
                const bool negate = ((static_cast<int>(r) + position) % 2) != 0;
                Rat contribution = minor * entry;
                auto [it, inserted] = next.try_emplace(mask | bit, Rat(0));
                if (negate) {
                    it->second -= contribution;
                } else {
                    it->second += contribution;
                }
                if (!inserted && it->second == 0) {
                    next.erase(it);
                }
            }
        }
        level = std::move(next);
    }
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const auto it = level.find(full);
    return it == level.end() ? Rat(0) : it->second;
}

}  // namespace

Rat rational_determinant(const std::vector<Rat>& cells, std::size_t n, DetMode mode) {
    if (cells.size() != n * n) {
        throw std::invalid_argument("matrix cell count does not match its size");
    }
    if (n == 0) {
        return 1;  // the empty determinant
    }
    if (mode == DetMode::Auto) {
        mode = n <= 5 ? DetMode::Cofactor : DetMode::FractionFree;
    }
    return mode == DetMode::FractionFree ? bareiss_rational(cells, n)
                                         : cofactor_rational(cells, n);
}

}  // namespace shw
