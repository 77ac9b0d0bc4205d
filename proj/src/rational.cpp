#include "shw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace shw {

Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiply up and divide down immediately; each intermediate quotient is a
    // smaller binomial coefficient, so the division is always exact.
    Int result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rat falling_factorial(const Rat& x, unsigned r) {
    Rat result = 1;
    for (unsigned ell = 0; ell < r; ++ell) {
        result *= x - ell;
        if (result == 0) {
            break;
        }
    }
    return result;
}

Rat pow_rational(const Rat& base, unsigned e) {
    Rat result = 1;
    Rat square = base;
    for (unsigned bits = e; bits != 0; bits >>= 1) {
        if (bits & 1u) {
            result *= square;
        }
        if (bits > 1) {
            square *= square;
        }
    }
    return result;
}

bool is_integer(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

bool is_natural(const Rat& q) {
    return is_integer(q) && q >= 0;
}

std::string format_rational(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

// Reads a run of decimal digits starting at pos; throws if none are present.
Int read_digits(std::string_view text, std::size_t& pos, const char* what) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument(std::string("position ") + std::to_string(pos) +
                                    ": expected " + what);
    }
    Int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    return value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Int num = read_digits(text, pos, "an integer");
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits(text, pos, "a positive denominator");
        if (den == 0) {
            throw std::invalid_argument("position " + std::to_string(pos) +
                                        ": denominator is zero");
        }
    }
    if (pos != text.size()) {
        throw std::invalid_argument("position " + std::to_string(pos) +
                                    ": trailing characters after rational");
    }
    Rat value(num, den);
    return negative ? Rat(-value) : value;
}

}  // namespace shw
