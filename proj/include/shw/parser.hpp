// Text grammar for polynomials.
//
//   poly    := term (("+"|"-") term)* | "0"
//   term    := [sign] [rational "*"] factor ("*" factor)*  |  [sign] rational
//   factor  := var ["^" exponent]
//   var     := "x"|"y"|"z"|"w"|"r"|"t"|"u"|"s"   (position = coordinate index)
//   exponent:= integer | "(" integer "/" positive-integer ")"
//   rational:= integer ["/" positive-integer]
//
// Parsing is whitespace-insensitive and reports failures with a character
// position. Formatting is canonical: terms in graded order, coefficient "1*"
// elided, "+ -c" printed as "- c"; parse(format(p)) == p.
#pragma once

#include "shw/polynomial.hpp"

#include <string>
#include <string_view>

namespace shw {

// The text grammar names at most eight variables; the programmatic interface
// has no such cap.
inline constexpr unsigned kMaxNamedVariables = 8;

// 0 -> 'x', 1 -> 'y', 2 -> 'z', 3 -> 'w', 4 -> 'r', 5 -> 't', 6 -> 'u', 7 -> 's'.
char variable_name(unsigned index);

// Throws std::invalid_argument with a position on syntax errors, on variables
// beyond `dimension`, and on zero denominators.
GenPolynomial parse_poly(std::string_view text, unsigned dimension);

std::string format_poly(const GenPolynomial& p);

}  // namespace shw
