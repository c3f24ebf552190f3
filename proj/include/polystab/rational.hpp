#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polystab {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& x) { return x.sign(); }

inline Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// "p/q" when q != 1, plain integer otherwise.
inline std::string to_string(const Rat& x) { return x.str(); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re;
    Rat im;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CRat conj() const { return {re, -im}; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

std::string to_string(const CRat& x);

}  // namespace polystab
