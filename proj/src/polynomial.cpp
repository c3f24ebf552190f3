#include "polystab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polystab {

std::string to_string(const CRat& x) {
    if (x.im == 0) return to_string(x.re);
    std::ostringstream os;
    if (x.re != 0) {
        os << x.re;
        if (x.im > 0) os << "+";
    }
    if (x.im == -1) {
        os << "-";
    } else if (x.im != 1) {
        os << x.im;
    }
    os << "i";
    return os.str();
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

void Polynomial::normalize() {
    auto it = std::find_if(c_.begin(), c_.end(), [](const Rat& x) { return x != 0; });
    c_.erase(c_.begin(), it);
}

Polynomial Polynomial::constant(Rat c) {
    Polynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(Rat c, int d) {
    Polynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(d) + 1, Rat(0));
        p.c_[0] = std::move(c);
    }
    return p;
}

int Polynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.front();
}

Rat Polynomial::coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rat(0);
    return c_[c_.size() - 1 - static_cast<size_t>(d)];
}

const Rat& Polynomial::constant_term() const {
    static const Rat zero(0);
    return c_.empty() ? zero : c_.back();
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc(0);
    for (const Rat& a : c_) acc = acc * x + a;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (const Rat& a : c_) acc = acc * x + to_double(a);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    const int n = static_cast<int>(c_.size()) - 1;
    for (size_t i = 0; i + 1 < c_.size(); ++i) d[i] = Rat(n - static_cast<int>(i)) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial to monic");
    return Rat(1) / leading() * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[out.size() - a.c_.size() + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[out.size() - b.c_.size() + i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& p) {
    std::vector<Rat> out(p.c_);
    for (Rat& x : out) x = -x;
    Polynomial q;
    q.c_ = std::move(out);
    return q;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
    if (s == 0) return {};
    std::vector<Rat> out(p.c_);
    for (Rat& x : out) x = s * x;
    Polynomial q;
    q.c_ = std::move(out);
    return q;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero() || p.degree() < d.degree()) return {Polynomial{}, p};
    std::vector<Rat> rem(p.coefficients());
    const int dn = d.degree();
    const int qn = static_cast<int>(rem.size()) - 1 - dn;
    std::vector<Rat> quot(static_cast<size_t>(qn) + 1, Rat(0));
    for (int i = 0; i <= qn; ++i) {
        const Rat c = rem[static_cast<size_t>(i)] / d.leading();
        if (c == 0) continue;
        quot[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= dn; ++j)
            rem[static_cast<size_t>(i + j)] -= c * d.coefficients()[static_cast<size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd_monic(Polynomial p, Polynomial q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd of two zero polynomials is undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        Polynomial r = divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("polynomial division left a remainder");
    return q;
}

Polynomial reversed(const Polynomial& p) {
    if (p.is_zero() || p.constant_term() == 0)
        throw std::domain_error("reversal requires a nonzero constant term");
    std::vector<Rat> out(p.coefficients().rbegin(), p.coefficients().rend());
    return Polynomial(std::move(out));
}

Rat cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("root bound requires degree >= 1");
    Rat m(0);
    for (size_t i = 1; i < p.coefficients().size(); ++i) {
        const Rat q = abs(Rat(p.coefficients()[i] / p.leading()));
        if (q > m) m = q;
    }
    return 1 + m;
}

ComplexPolynomial::ComplexPolynomial(std::vector<CRat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

ComplexPolynomial::ComplexPolynomial(const Polynomial& real) {
    c_.reserve(real.coefficients().size());
    for (const Rat& a : real.coefficients()) c_.emplace_back(a);
}

void ComplexPolynomial::normalize() {
    auto it = std::find_if(c_.begin(), c_.end(), [](const CRat& x) { return !x.is_zero(); });
    c_.erase(c_.begin(), it);
}

int ComplexPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(c_.size()) - 1;
}

const CRat& ComplexPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.front();
}

bool ComplexPolynomial::is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const CRat& x) { return x.is_real(); });
}

Polynomial ComplexPolynomial::as_real() const {
    if (!is_real()) throw std::logic_error("polynomial has nonreal coefficients");
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const CRat& x : c_) out.push_back(x.re);
    return Polynomial(std::move(out));
}

CRat ComplexPolynomial::operator()(const CRat& x) const {
    CRat acc;
    for (const CRat& a : c_) acc = acc * x + a;
    return acc;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CRat> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator*(const CRat& s, const ComplexPolynomial& p) {
    if (s.is_zero()) return {};
    std::vector<CRat> out(p.c_);
    for (CRat& x : out) x = s * x;
    return ComplexPolynomial(std::move(out));
}

ImaginaryAxisSplit imaginary_axis_split(const ComplexPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("cannot split the zero polynomial");
    ComplexPolynomial q = p;
    if (!q.leading().is_real()) {
        q = q.leading().conj() * q;  // leading becomes |a_0|^2 > 0, roots unchanged
    } else if (q.leading().re < 0) {
        q = CRat(Rat(-1)) * q;
    }
    const int n = q.degree();
    // Coefficient of w^{n-k} in i^{-k} a_k, collected by k mod 4.
    std::vector<Rat> f0(static_cast<size_t>(n) + 1, Rat(0));
    std::vector<Rat> f1(static_cast<size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
        const CRat& a = q.coefficients()[static_cast<size_t>(k)];
        switch (k % 4) {
            case 0: f0[static_cast<size_t>(k)] += a.re; f1[static_cast<size_t>(k)] -= a.im; break;
            case 1: f0[static_cast<size_t>(k)] += a.im; f1[static_cast<size_t>(k)] += a.re; break;
            case 2: f0[static_cast<size_t>(k)] -= a.re; f1[static_cast<size_t>(k)] += a.im; break;
            default: f0[static_cast<size_t>(k)] -= a.im; f1[static_cast<size_t>(k)] -= a.re; break;
        }
    }
    return {Polynomial(std::move(f0)), Polynomial(std::move(f1))};
}

ImaginaryAxisSplit imaginary_axis_split(const Polynomial& p) {
    return imaginary_axis_split(ComplexPolynomial(p));
}

EvenOddSplit even_odd_split(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("cannot split the zero polynomial");
    const int n = p.degree();
    std::vector<Rat> even;  // coefficients a_0, a_2, ... by descending power
    std::vector<Rat> odd;   // coefficients a_1, a_3, ...
    for (int k = 0; k <= n; ++k) {
        (k % 2 == 0 ? even : odd).push_back(p.coefficients()[static_cast<size_t>(k)]);
    }
    // g0 collects the coefficients of even powers of z, g1 those of odd powers.
    if (n % 2 == 0) return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
    return {Polynomial(std::move(odd)), Polynomial(std::move(even))};
}

}  // namespace polystab
