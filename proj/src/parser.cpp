#include "shw/parser.hpp"

#include <cctype>
#include <cstring>
#include <stdexcept>

namespace shw {

namespace {

constexpr char kVariableNames[] = "xyzwrtus";

void require_named_dimension(unsigned dimension) {
    if (dimension < 1 || dimension > kMaxNamedVariables) {
        throw std::invalid_argument("the text grammar names 1 to 8 variables; dimension " +
                                    std::to_string(dimension) + " is out of range");
    }
}

class Parser {
public:
    Parser(std::string_view text, unsigned dimension) : text_(text), dimension_(dimension) {}

    GenPolynomial run() {
        GenPolynomial poly(dimension_);
        skip_whitespace();
        if (at_end()) {
            fail("expected a polynomial");
        }
        bool negative = read_optional_sign();
        read_term(poly, negative);
        skip_whitespace();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-' between terms");
            }
            ++pos_;
            skip_whitespace();
            // Each term may carry its own sign on top of the joining operator,
            // e.g. "x + -y".
            const bool term_negative = read_optional_sign();
            read_term(poly, (op == '-') != term_negative);
            skip_whitespace();
        }
        return poly;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("position " + std::to_string(pos_) + ": " + message);
    }

    bool read_optional_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            const bool negative = peek() == '-';
            ++pos_;
            skip_whitespace();
            return negative;
        }
        return false;
    }

    Int read_unsigned_integer(const char* what) {
        skip_whitespace();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected ") + what);
        }
        Int value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return value;
    }

    Int read_signed_integer(const char* what) {
        skip_whitespace();
        bool negative = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos_;
        }
        Int value = read_unsigned_integer(what);
        return negative ? Int(-value) : value;
    }

    // rational := integer ["/" positive-integer]; the integer was read already.
    Rat finish_rational(Int numerator) {
        skip_whitespace();
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            Int denominator = read_unsigned_integer("a positive denominator");
            if (denominator == 0) {
                throw std::invalid_argument("position " + std::to_string(at) +
                                            ": denominator is zero");
            }
            return Rat(numerator, denominator);
        }
        return Rat(numerator);
    }

    int variable_index_at() const {
        const char c = peek();
        if (c == '\0') {
            return -1;
        }
        const char* hit = std::strchr(kVariableNames, c);
        return hit != nullptr ? static_cast<int>(hit - kVariableNames) : -1;
    }

    // exponent := integer | "(" integer "/" positive-integer ")"
    Rat read_exponent() {
        skip_whitespace();
        if (!at_end() && peek() == '(') {
            ++pos_;
            Int numerator = read_signed_integer("an integer exponent");
            skip_whitespace();
            if (at_end() || peek() != '/') {
                fail("expected '/' in a rational exponent");
            }
            ++pos_;
            const std::size_t at = pos_;
            Int denominator = read_unsigned_integer("a positive denominator");
            if (denominator == 0) {
                throw std::invalid_argument("position " + std::to_string(at) +
                                            ": denominator is zero");
            }
            skip_whitespace();
            if (at_end() || peek() != ')') {
                fail("expected ')' after a rational exponent");
            }
            ++pos_;
            return Rat(numerator, denominator);
        }
        return Rat(read_signed_integer("an integer exponent"));
    }

    // factor := var ["^" exponent]; accumulates into `exponents`.
    void read_factor(Exponents& exponents) {
        skip_whitespace();
        if (at_end()) {
            fail("expected a variable");
        }
        const int index = variable_index_at();
        if (index < 0) {
            fail(std::string("expected a variable, got '") + peek() + "'");
        }
        if (static_cast<unsigned>(index) >= dimension_) {
            fail(std::string("variable '") + peek() + "' exceeds dimension " +
                 std::to_string(dimension_));
        }
        ++pos_;
        skip_whitespace();
        Rat exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            exponent = read_exponent();
        }
        exponents[static_cast<std::size_t>(index)] += exponent;
    }

    // term := [rational "*"] factor ("*" factor)* | rational
    // (the sign was consumed by the caller).
    void read_term(GenPolynomial& poly, bool negative) {
        skip_whitespace();
        if (at_end()) {
            fail("expected a term");
        }
        Rat coefficient = 1;
        bool saw_factor = false;
        Exponents exponents(dimension_, Rat(0));
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = finish_rational(read_unsigned_integer("an integer"));
            skip_whitespace();
            if (!at_end() && peek() == '*') {
                ++pos_;
                read_factor(exponents);
                saw_factor = true;
            }
        } else {
            read_factor(exponents);
            saw_factor = true;
        }
        if (saw_factor) {
            skip_whitespace();
            while (!at_end() && peek() == '*') {
                ++pos_;
                read_factor(exponents);
                skip_whitespace();
            }
        }
        poly.add_term(exponents, negative ? Rat(-coefficient) : coefficient);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    unsigned dimension_;
};

std::string format_exponent(const Rat& e) {
    if (is_integer(e)) {
        return format_rational(e);
    }
    return "(" + format_rational(e) + ")";
}

// The factor list of one term, e.g. "x^2*y"; empty for a constant term.
std::string format_factors(const Exponents& exponents) {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += variable_name(static_cast<unsigned>(i));
        if (exponents[i] != 1) {
            out += '^';
            out += format_exponent(exponents[i]);
        }
    }
    return out;
}

}  // namespace

char variable_name(unsigned index) {
    if (index >= kMaxNamedVariables) {
        throw std::invalid_argument("no variable name for coordinate " + std::to_string(index));
    }
    return kVariableNames[index];
}

GenPolynomial parse_poly(std::string_view text, unsigned dimension) {
    require_named_dimension(dimension);
    return Parser(text, dimension).run();
}

std::string format_poly(const GenPolynomial& p) {
    require_named_dimension(p.dimension());
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [exponents, coefficient] : p.terms()) {
        const bool negative = coefficient < 0;
        if (out.empty()) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rat magnitude = negative ? Rat(-coefficient) : coefficient;
        const std::string factors = format_factors(exponents);
        if (factors.empty()) {
            out += format_rational(magnitude);
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += format_rational(magnitude);
            out += '*';
            out += factors;
        }
    }
    return out;
}

}  // namespace shw
