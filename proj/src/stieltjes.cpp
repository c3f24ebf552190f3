#include "polystab/stieltjes.hpp"

#include "polystab/hankel.hpp"
#include "polystab/sturm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polystab {

ContinuedFraction cf_expand(const RationalFunction& R) {
    if (!R.vanishes_at_infinity())
        throw std::domain_error("continued-fraction expansion requires deg num < deg den");
    ContinuedFraction cf;
    Polynomial prev = R.den();
    Polynomial cur = R.num();
    while (!cur.is_zero()) {
        auto [q, r] = divmod(prev, cur);
        cf.terms.push_back(std::move(q));
        prev = std::move(cur);
        cur = -r;  // f_{k-1} = d_k f_k - f_{k+1}
    }
    return cf;
}

RationalFunction cf_reconstruct(const ContinuedFraction& cf) {
    RationalFunction r = RationalFunction::zero();
    for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
        r = (RationalFunction::from_polynomial(*it) - r).reciprocal();
    }
    return r;
}

int index_from_cf(const ContinuedFraction& cf) {
    int total = 0;
    for (const Polynomial& d : cf.terms) {
        if (d.is_zero()) throw std::domain_error("zero quotient in a continued fraction");
        if (d.degree() % 2 == 1) total += sign(d.leading());
    }
    return total;
}

bool is_proper_via_cf(const RationalFunction& R) {
    if (!R.vanishes_at_infinity())
        throw std::domain_error("properness test requires deg num < deg den");
    if (R.is_zero()) return false;
    const ContinuedFraction cf = cf_expand(R);
    if (static_cast<int>(cf.terms.size()) != R.den().degree()) return false;
    for (const Polynomial& d : cf.terms)
        if (d.degree() != 1 || d.leading() <= 0) return false;
    return true;
}

namespace {

std::vector<Int> divisors(Int x) {
    if (x < 0) x = -x;
    std::vector<Int> out;
    for (Int d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            out.push_back(x / d);
        }
    }
    return out;
}

// All rational roots of f, found by the rational-root test on the integer
// form of f. Repeated roots are reported once.
std::vector<Rat> rational_roots(const Polynomial& f) {
    std::vector<Rat> roots;
    Polynomial g = f;
    while (!g.is_zero() && g.degree() > 0 && g.constant_term() == 0) {
        if (std::find(roots.begin(), roots.end(), Rat(0)) == roots.end())
            roots.emplace_back(0);
        g = divmod(g, Polynomial{Rat(1), Rat(0)}).first;
    }
    if (g.is_zero() || g.degree() == 0) return roots;
    Int scale(1);
    for (const Rat& c : g.coefficients()) scale = boost::multiprecision::lcm(scale, denominator(c));
    std::vector<Int> ic;
    ic.reserve(g.coefficients().size());
    for (const Rat& c : g.coefficients()) ic.push_back(numerator(Rat(c * scale)));
    for (const Int& p : divisors(ic.back()))
        for (const Int& q : divisors(ic.front()))
            for (int s : {1, -1}) {
                const Rat cand = Rat(s * p, q);
                if (g(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

}  // namespace

PartialFractions partial_fractions_simple(const RationalFunction& R) {
    if (!R.vanishes_at_infinity())
        throw std::domain_error("partial fractions require deg num < deg den");
    const Polynomial& den = R.den();
    const int n = den.degree();
    std::vector<Rat> poles = rational_roots(den);
    if (static_cast<int>(poles.size()) != n)
        throw std::domain_error(
            "denominator must split into distinct rational linear factors");
    std::sort(poles.begin(), poles.end());
    const Polynomial dden = den.derivative();
    PartialFractions out;
    out.poles = std::move(poles);
    out.residues.reserve(out.poles.size());
    for (const Rat& w : out.poles) out.residues.push_back(R.num()(w) / dden(w));
    return out;
}

bool hermite_biehler(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("stability test requires degree >= 1");
    const auto [f0, f1] = imaginary_axis_split(p);
    const int n = f0.degree();
    if (f1.is_zero()) return false;
    // Roots of both polynomials real and simple.
    const RootTypeCount c0 = borchardt_jacobi(f0);
    if (c0.distinct_conjugate_pairs != 0 || c0.distinct_real != n) return false;
    if (f1.degree() >= 1) {
        const RootTypeCount c1 = borchardt_jacobi(f1);
        if (c1.distinct_conjugate_pairs != 0 || c1.distinct_real != f1.degree()) return false;
    }
    // Interlacing: the index of f1/f0 over the line is extremal in modulus.
    const RationalFunction r(f1, f0);
    if (r.den().degree() != n) return false;  // common factor: roots not disjoint
    const int index = cauchy_index_line(r);
    if (index != n && index != -n) return false;
    // Orientation: f1'f0 - f0'f1 < 0 somewhere; past every root of f0*f1 the
    // sign is unambiguous.
    const Polynomial witness_poly = f1.derivative() * f0 - f0.derivative() * f1;
    const Rat w = cauchy_root_bound(f0 * f1) + 1;
    return sign(witness_poly(w)) < 0 && index == n;
}

Mobius::Mobius(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw std::domain_error("Mobius map must have determinant 1");
}

RationalFunction mobius_apply(const Mobius& m, const RationalFunction& R) {
    Polynomial num = Polynomial::constant(m.a) * R.num() + Polynomial::constant(m.b) * R.den();
    Polynomial den = Polynomial::constant(m.c) * R.num() + Polynomial::constant(m.d) * R.den();
    if (den.is_zero())
        throw std::domain_error("image of the Mobius map is identically infinite");
    return {std::move(num), std::move(den)};
}

}  // namespace polystab
