// Exact arbitrary-precision scalars: integers and rationals kept in lowest
// terms with positive denominators, plus the combinatorial helpers (factorial,
// binomial, falling factorial) used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace shw {

using Int = boost::multiprecision::cpp_int;

// cpp_rational normalizes on every operation, so equality is value equality.
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// x * (x-1) * ... * (x-r+1); the empty product (r = 0) is 1.
Rat falling_factorial(const Rat& x, unsigned r);

// base^e for a natural exponent, with 0^0 defined as 1.
Rat pow_rational(const Rat& base, unsigned e);

bool is_integer(const Rat& q);
bool is_natural(const Rat& q);  // integer and >= 0

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& q);

// Accepts an optionally signed integer, or "p/q" with q a positive integer.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rat parse_rational(std::string_view text);

}  // namespace shw
