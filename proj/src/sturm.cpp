#include "polystab/sturm.hpp"

#include <stdexcept>

namespace polystab {

int sign_changes(const std::vector<Rat>& values) {
    int count = 0;
    int prev = 0;
    for (const Rat& v : values) {
        const int s = sign(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int sign_right_of(const Polynomial& f, const Rat& a) {
    Polynomial g = f;
    while (!g.is_zero()) {
        const int s = sign(g(a));
        if (s != 0) return s;
        g = g.derivative();
    }
    return 0;
}

int sign_left_of(const Polynomial& f, const Rat& a) {
    Polynomial g = f;
    int parity = 1;
    while (!g.is_zero()) {
        const int s = sign(g(a));
        if (s != 0) return s * parity;
        g = g.derivative();
        parity = -parity;
    }
    return 0;
}

SturmChain SturmChain::build(Polynomial f0, Polynomial f1) {
    if (f0.is_zero()) throw std::domain_error("Sturm chain requires a nonzero first member");
    if (!f1.is_zero() && f1.degree() >= f0.degree())
        throw std::domain_error("Sturm chain requires deg f1 < deg f0");
    SturmChain chain;
    chain.polys_.push_back(std::move(f0));
    if (f1.is_zero()) return chain;
    chain.polys_.push_back(std::move(f1));
    for (;;) {
        const Polynomial& prev = chain.polys_[chain.polys_.size() - 2];
        const Polynomial& cur = chain.polys_.back();
        Polynomial next = -divmod(prev, cur).second;  // f_{k-1} = d_k f_k - f_{k+1}
        if (next.is_zero()) break;
        chain.polys_.push_back(std::move(next));
    }
    return chain;
}

std::vector<Rat> SturmChain::leading_coefficients() const {
    std::vector<Rat> out;
    out.reserve(polys_.size());
    for (const Polynomial& f : polys_) out.push_back(f.leading());
    return out;
}

bool SturmChain::is_regular() const {
    const int n = polys_.front().degree();
    if (static_cast<int>(polys_.size()) != n + 1) return false;
    for (int k = 0; k <= n; ++k)
        if (polys_[static_cast<size_t>(k)].degree() != n - k) return false;
    return true;
}

int SturmChain::sign_changes_right_of(const Rat& a) const {
    std::vector<Rat> signs;
    signs.reserve(polys_.size());
    for (const Polynomial& f : polys_) signs.emplace_back(sign_right_of(f, a));
    return sign_changes(signs);
}

int SturmChain::sign_changes_left_of(const Rat& b) const {
    std::vector<Rat> signs;
    signs.reserve(polys_.size());
    for (const Polynomial& f : polys_) signs.emplace_back(sign_left_of(f, b));
    return sign_changes(signs);
}

int SturmChain::sign_changes_at(int direction) const {
    // The sign of f_k at +-infinity is the sign of its leading term.
    std::vector<Rat> signs;
    signs.reserve(polys_.size());
    for (const Polynomial& f : polys_) {
        int s = sign(f.leading());
        if (direction < 0 && f.degree() % 2 != 0) s = -s;
        signs.emplace_back(s);
    }
    return sign_changes(signs);
}

int cauchy_index_interval(const RationalFunction& R, const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::domain_error("Cauchy index requires a < b");
    if (!R.vanishes_at_infinity())
        throw std::domain_error("Cauchy index on an interval requires deg num < deg den");
    if (R.is_zero()) return 0;
    if (R.den()(a) == 0 || R.den()(b) == 0)
        throw std::domain_error("pole at an interval endpoint");
    const SturmChain chain = SturmChain::build(R.den(), R.num());
    return chain.sign_changes_right_of(a) - chain.sign_changes_left_of(b);
}

int cauchy_index_line(const RationalFunction& R) {
    if (R.is_zero()) return 0;
    RationalFunction r = R;
    if (!r.vanishes_at_infinity()) {
        if (r.num().degree() > r.den().degree())
            throw std::domain_error(
                "line index requires deg num <= deg den; use projective_index");
        // Splitting off the constant value at infinity moves no finite jump.
        const Rat c = r.num().leading() / r.den().leading();
        r = r - RationalFunction::from_polynomial(Polynomial::constant(c));
    }
    if (r.is_zero()) return 0;
    const SturmChain chain = SturmChain::build(r.den(), r.num());
    return chain.sign_changes_at(-1) - chain.sign_changes_at(+1);
}

int index_at_infinity(const RationalFunction& R) {
    if (R.is_zero() || R.vanishes_at_infinity()) return 0;
    const int order = R.num().degree() - R.den().degree();
    if (order <= 0 || order % 2 == 0) return 0;
    return -sign(R.num().leading() / R.den().leading());
}

int projective_index(const RationalFunction& R) {
    if (R.is_zero()) return 0;
    RationalFunction proper = R;
    if (R.num().degree() >= R.den().degree()) {
        auto [q, r] = divmod(R.num(), R.den());
        proper = RationalFunction(std::move(r), R.den());
    }
    return (proper.is_zero() ? 0 : cauchy_index_line(proper)) + index_at_infinity(R);
}

int distinct_real_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (f.degree() == 0) return 0;
    return cauchy_index_line(RationalFunction(f.derivative(), f));
}

int distinct_real_roots(const Polynomial& f, const Rat& a, const Rat& b) {
    if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (f.degree() == 0) return 0;
    return cauchy_index_interval(RationalFunction(f.derivative(), f), a, b);
}

int real_roots_with_multiplicity(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
    // A root of multiplicity m survives m-1 rounds of gcd(g, g') peeling and
    // is counted once as a distinct root at each level.
    Polynomial g = f;
    int total = 0;
    while (g.degree() > 0) {
        total += distinct_real_roots(g);
        g = gcd_monic(g, g.derivative());
    }
    return total;
}

namespace {

void isolate_rec(const Polynomial& squarefree, const SturmChain& chain, const Rat& a,
                 const Rat& b, int count, std::vector<std::pair<Rat, Rat>>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rat mid = (a + b) / 2;
    if (squarefree(mid) == 0) {
        // Exact root at the midpoint: shrink a private interval around it.
        Rat delta = (b - a) / 4;
        for (;;) {
            const Rat lo = mid - delta;
            const Rat hi = mid + delta;
            if (squarefree(lo) != 0 && squarefree(hi) != 0 &&
                chain.sign_changes_right_of(lo) - chain.sign_changes_left_of(hi) == 1) {
                isolate_rec(squarefree, chain, a, lo, chain.sign_changes_right_of(a) -
                                                          chain.sign_changes_left_of(lo),
                            out);
                out.emplace_back(lo, hi);
                isolate_rec(squarefree, chain, hi, b, chain.sign_changes_right_of(hi) -
                                                          chain.sign_changes_left_of(b),
                            out);
                return;
            }
            delta /= 2;
        }
    }
    const int left = chain.sign_changes_right_of(a) - chain.sign_changes_left_of(mid);
    isolate_rec(squarefree, chain, a, mid, left, out);
    isolate_rec(squarefree, chain, mid, b, count - left, out);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    if (f.degree() == 0) return {};
    const Polynomial squarefree = divide_exact(f, gcd_monic(f, f.derivative()));
    if (squarefree.degree() == 0) return {};
    const Rat bound = cauchy_root_bound(squarefree);
    const SturmChain chain = SturmChain::build(squarefree, squarefree.derivative());
    const int count =
        chain.sign_changes_right_of(-bound) - chain.sign_changes_left_of(bound);
    std::vector<std::pair<Rat, Rat>> out;
    isolate_rec(squarefree, chain, -bound, bound, count, out);
    return out;
}

namespace detail {

SplitParts analyze_split(const ComplexPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("cannot analyze the zero polynomial");
    SplitParts parts{Polynomial::constant(1), RationalFunction::zero(), p.degree(), 0, 0};
    if (p.degree() == 0) return parts;
    auto [f0, f1] = imaginary_axis_split(p);
    Polynomial g = f1.is_zero() ? f0.monic() : gcd_monic(f0, f1);
    Polynomial f0r = f0;
    Polynomial f1r = f1;
    if (g.degree() > 0) {
        f0r = divide_exact(f0, g);
        f1r = f1.is_zero() ? Polynomial{} : divide_exact(f1, g);
        parts.axis_count = real_roots_with_multiplicity(g);
        // Nonreal roots of the gcd pair up into roots of p placed
        // symmetrically about the imaginary axis, one on each side.
        parts.symmetric_pairs = (g.degree() - parts.axis_count) / 2;
    }
    parts.axis_gcd = std::move(g);
    parts.reduced = RationalFunction(std::move(f1r), std::move(f0r));
    return parts;
}

HalfPlaneSplit assemble_split(const SplitParts& parts, int reduced_index) {
    HalfPlaneSplit out;
    out.imaginary_axis_gcd = parts.axis_gcd;
    out.axis_count = parts.axis_count;
    const int off_axis =
        parts.degree - parts.axis_count - 2 * parts.symmetric_pairs;
    out.n_minus = (off_axis + reduced_index) / 2 + parts.symmetric_pairs;
    out.n_plus = (off_axis - reduced_index) / 2 + parts.symmetric_pairs;
    return out;
}

}  // namespace detail

HalfPlaneSplit half_plane_split(const ComplexPolynomial& p) {
    return half_plane_split_with(
        p, [](const RationalFunction& r) { return r.is_zero() ? 0 : cauchy_index_line(r); });
}

HalfPlaneSplit half_plane_split(const Polynomial& p) {
    return half_plane_split(ComplexPolynomial(p));
}

}  // namespace polystab
