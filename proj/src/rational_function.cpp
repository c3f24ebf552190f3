#include "polystab/rational_function.hpp"

#include <stdexcept>

namespace polystab {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = gcd_monic(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Rat lead = den_.leading();
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

bool RationalFunction::vanishes_at_infinity() const {
    return is_zero() || num_.degree() < den_.degree();
}

Rat RationalFunction::operator()(const Rat& x) const {
    const Rat d = den_(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_(x) / d;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of the zero function");
    return {den_, num_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

}  // namespace polystab
