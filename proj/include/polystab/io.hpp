#pragma once

#include "polystab/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace polystab {

/// Malformed polynomial text; token_index is the 0-based offending token
/// (-1 when the input as a whole is bad).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int token)
        : std::runtime_error(msg), token_index(token) {}
    int token_index;
};

/// One rational token: an integer or "p/q".
Rat parse_rational(const std::string& token);

/// One coefficient token: rational, or complex as "a+bi" / "a-bi" / "bi" / "i".
CRat parse_coefficient(const std::string& token);

/// Whitespace-separated coefficients in descending degree order. Rejects
/// empty input and a zero leading coefficient.
ComplexPolynomial parse_polynomial(const std::string& text);

std::string format_polynomial(const Polynomial& p);
std::string format_polynomial(const ComplexPolynomial& p);

}  // namespace polystab
