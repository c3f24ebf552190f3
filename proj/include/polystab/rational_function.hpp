#pragma once

#include "polystab/polynomial.hpp"

namespace polystab {

/// Quotient of two real polynomials, kept in lowest terms with a monic
/// denominator. The zero function is 0/1.
class RationalFunction {
  public:
    /// Reduces num/den by their gcd and rescales so den is monic.
    /// Throws std::domain_error when den is the zero polynomial.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero() { return {Polynomial{}, Polynomial::constant(1)}; }
    static RationalFunction from_polynomial(Polynomial p) {
        return {std::move(p), Polynomial::constant(1)};
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// deg num < deg den (the function vanishes at infinity).
    bool vanishes_at_infinity() const;

    Rat operator()(const Rat& x) const;  // throws on a pole

    RationalFunction reciprocal() const;  // throws when this is zero

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

  private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace polystab
