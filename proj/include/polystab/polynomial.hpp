#pragma once

#include "polystab/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace polystab {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// descending degree order (leading coefficient first). The zero polynomial
/// is the empty coefficient sequence; a nonzero polynomial always has a
/// nonzero leading coefficient.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    Polynomial(std::initializer_list<Rat> coeffs);

    static Polynomial constant(Rat c);
    /// c * x^d
    static Polynomial monomial(Rat c, int d);

    bool is_zero() const { return c_.empty(); }
    /// Degree of a nonzero polynomial. Undefined for the zero polynomial
    /// (throws std::logic_error rather than picking a -1 / -inf convention).
    int degree() const;
    const std::vector<Rat>& coefficients() const { return c_; }
    const Rat& leading() const;
    /// Coefficient of x^d (zero if d out of range).
    Rat coefficient(int d) const;
    const Rat& constant_term() const;

    /// Exact Horner evaluation.
    Rat operator()(const Rat& x) const;
    double eval_double(double x) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rat& s, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void normalize();

    std::vector<Rat> c_;
};

/// Quotient and remainder of exact long division: p = d*q + r, deg r < deg d.
/// Throws std::domain_error when d is the zero polynomial.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d);

/// Monic greatest common divisor via Euclidean remainders.
/// Throws std::domain_error when both inputs are zero.
Polynomial gcd_monic(Polynomial p, Polynomial q);

/// Exact division; throws std::domain_error unless d divides p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

/// Coefficient sequence reversed, i.e. x^n p(1/x). Requires p(0) != 0.
Polynomial reversed(const Polynomial& p);

/// B = 1 + max_k |a_k / a_0|; every root has modulus < B. Requires deg p >= 1.
Rat cauchy_root_bound(const Polynomial& p);

/// Polynomial with complex rational coefficients, descending order.
class ComplexPolynomial {
  public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<CRat> coeffs);
    ComplexPolynomial(const Polynomial& real);  // NOLINT: embedding of real polynomials

    bool is_zero() const { return c_.empty(); }
    int degree() const;
    const std::vector<CRat>& coefficients() const { return c_; }
    const CRat& leading() const;
    bool is_real() const;
    /// Real part collapse; requires is_real().
    Polynomial as_real() const;

    CRat operator()(const CRat& x) const;

    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator*(const CRat& s, const ComplexPolynomial& p);
    friend bool operator==(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        return a.c_ == b.c_;
    }

  private:
    void normalize();

    std::vector<CRat> c_;
};

/// The pair f0, f1 with f0(w) - i*f1(w) = i^{-n} p(iw). Both are real
/// polynomials; deg f1 < deg f0 = deg p. Roots of p on the imaginary axis
/// correspond exactly to common real roots of f0 and f1.
struct ImaginaryAxisSplit {
    Polynomial f0;
    Polynomial f1;
};

/// Splits p along the imaginary axis. The input is normalized first so that
/// the leading coefficient is real and positive (a real polynomial is negated
/// if needed; a complex one is multiplied by the conjugate of its leading
/// coefficient). Neither changes the root set. Throws on the zero polynomial.
ImaginaryAxisSplit imaginary_axis_split(const ComplexPolynomial& p);
ImaginaryAxisSplit imaginary_axis_split(const Polynomial& p);

/// The pair g0, g1 with p(z) = g0(z^2) + z*g1(z^2).
struct EvenOddSplit {
    Polynomial g0;
    Polynomial g1;
};

EvenOddSplit even_odd_split(const Polynomial& p);

}  // namespace polystab
