#include "polystab/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace polystab {

namespace {

bool valid_integer(const std::string& s) {
    size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_integer(const std::string& s) {
    return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rational_or_throw(const std::string& token, int index) {
    const size_t slash = token.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(token))
            throw ParseError("malformed rational '" + token + "'", index);
        return Rat(parse_integer(token));
    }
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw ParseError("malformed rational '" + token + "'", index);
    const Int d(parse_integer(den));
    if (d == 0) throw ParseError("zero denominator in '" + token + "'", index);
    return Rat(parse_integer(num), d);
}

// Splits "a+bi" (or "a-bi", "bi", "i", plain "a") at the sign separating the
// parts; the sign inside a leading "-3/4" or the one starting "+2i" must not
// be confused with a p/q slash context.
CRat parse_coefficient_or_throw(const std::string& token, int index) {
    if (token.empty()) throw ParseError("empty coefficient token", index);
    if (token.back() != 'i') return {parse_rational_or_throw(token, index), Rat(0)};
    const std::string body = token.substr(0, token.size() - 1);
    // Find the +/- that separates the real part from the imaginary part:
    // the last sign not at position 0.
    size_t split = std::string::npos;
    for (size_t j = body.size(); j-- > 1;) {
        if (body[j] == '+' || body[j] == '-') {
            split = j;
            break;
        }
    }
    std::string re_part;
    std::string im_part;
    if (split == std::string::npos) {
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);  // keeps the sign
    }
    if (im_part.empty() || im_part == "+")
        im_part += "1";
    else if (im_part == "-")
        im_part = "-1";
    CRat out;
    out.re = re_part.empty() ? Rat(0) : parse_rational_or_throw(re_part, index);
    out.im = parse_rational_or_throw(im_part, index);
    return out;
}

}  // namespace

Rat parse_rational(const std::string& token) { return parse_rational_or_throw(token, -1); }

CRat parse_coefficient(const std::string& token) {
    return parse_coefficient_or_throw(token, -1);
}

ComplexPolynomial parse_polynomial(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty polynomial", -1);
    std::vector<CRat> coeffs;
    coeffs.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i)
        coeffs.push_back(parse_coefficient_or_throw(tokens[i], static_cast<int>(i)));
    if (coeffs.front().is_zero())
        throw ParseError("leading coefficient is zero", 0);
    return ComplexPolynomial(std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += " ";
        out += to_string(p.coefficients()[i]);
    }
    return out;
}

std::string format_polynomial(const ComplexPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += " ";
        out += to_string(p.coefficients()[i]);
    }
    return out;
}

}  // namespace polystab
