#include "polystab/hankel.hpp"

#include "polystab/hurwitz.hpp"

#include <stdexcept>

namespace polystab {

MarkovSequence markov_parameters(const RationalFunction& R, int count) {
    if (count < 1) throw std::domain_error("need at least one Markov parameter");
    MarkovSequence out;
    Polynomial rem = R.num();
    if (!R.num().is_zero() && R.num().degree() >= R.den().degree()) {
        auto [q, r] = divmod(R.num(), R.den());
        out.polynomial_part = std::move(q);
        rem = std::move(r);
    }
    // rem/den = s_0/z + s_1/z^2 + ...; matching coefficients of z^{d-1-j}
    // gives a triangular system in the s_j.
    const Polynomial& den = R.den();
    const int d = den.degree();
    out.s.assign(static_cast<size_t>(count), Rat(0));
    for (int j = 0; j < count; ++j) {
        Rat acc = rem.coefficient(d - 1 - j);
        for (int i = 0; i < j; ++i) acc -= den.coefficient(d - (j - i)) * out.s[static_cast<size_t>(i)];
        out.s[static_cast<size_t>(j)] = acc / den.leading();
    }
    return out;
}

HankelReport hankel_rank_signature(const std::vector<Rat>& s, int n) {
    if (static_cast<int>(s.size()) < 2 * n - 1)
        throw std::domain_error("Hankel form needs 2n-1 sequence entries");
    Matrix a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = s[static_cast<size_t>(i + j)];
    // Symmetric congruence reduction: eliminate row and column together so the
    // matrix stays congruent to the original. When every usable diagonal
    // entry is zero but some off-diagonal one is not, adding that row+column
    // to the pivot position creates a nonzero diagonal entry (2x2 block rule).
    HankelReport report;
    for (int k = 0; k < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_with = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with >= 0) {
                std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_with)]);
                for (int i = 0; i < n; ++i)
                    std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                              a[static_cast<size_t>(i)][static_cast<size_t>(swap_with)]);
            } else {
                int off = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0) {
                        off = i;
                        break;
                    }
                if (off < 0) continue;  // row k is zero in the remaining block
                for (int j = 0; j < n; ++j)
                    a[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
                        a[static_cast<size_t>(off)][static_cast<size_t>(j)];
                for (int i = 0; i < n; ++i)
                    a[static_cast<size_t>(i)][static_cast<size_t>(k)] +=
                        a[static_cast<size_t>(i)][static_cast<size_t>(off)];
            }
        }
        const Rat pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (pivot == 0) continue;
        for (int i = k + 1; i < n; ++i) {
            const Rat factor = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / pivot;
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
            for (int j = 0; j < n; ++j)
                a[static_cast<size_t>(j)][static_cast<size_t>(i)] -=
                    factor * a[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
        if (pivot > 0)
            ++report.pos;
        else
            ++report.neg;
    }
    report.rank = report.pos + report.neg;
    report.signature = report.pos - report.neg;
    return report;
}

HankelReport hankel_rank_signature(const MarkovSequence& seq, int n) {
    return hankel_rank_signature(seq.s, n);
}

std::vector<Rat> hankel_leading_minors(const std::vector<Rat>& s, int n) {
    if (static_cast<int>(s.size()) < 2 * n - 1)
        throw std::domain_error("Hankel minors need 2n-1 sequence entries");
    std::vector<Rat> out;
    for (int k = 1; k <= n; ++k) {
        Matrix m(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    s[static_cast<size_t>(i + j)];
        out.push_back(determinant(std::move(m)));
    }
    return out;
}

std::vector<Rat> hankel_shifted_minors(const std::vector<Rat>& s, int n) {
    if (static_cast<int>(s.size()) < 2 * n)
        throw std::domain_error("shifted Hankel minors need 2n sequence entries");
    std::vector<Rat> shifted(s.begin() + 1, s.end());
    return hankel_leading_minors(shifted, n);
}

bool is_proper_via_hankel(const RationalFunction& R) {
    if (!R.vanishes_at_infinity())
        throw std::domain_error("properness test requires deg num < deg den");
    if (R.is_zero()) return false;
    const int n = R.den().degree();
    if (n == 0) return false;
    const MarkovSequence seq = markov_parameters(R, 2 * n - 1);
    for (const Rat& minor : hankel_leading_minors(seq.s, n))
        if (minor <= 0) return false;
    return true;
}

MarkovSequence newton_sums(const Polynomial& f, int count) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("Newton sums require degree >= 1");
    MarkovSequence out = markov_parameters(RationalFunction(f.derivative(), f), count);
    out.polynomial_part = Polynomial{};
    return out;
}

RootTypeCount borchardt_jacobi(const Polynomial& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("root classification requires degree >= 1");
    const int n = f.degree();
    const MarkovSequence sums = newton_sums(f, 2 * n - 1);
    const HankelReport report = hankel_rank_signature(sums.s, n);
    return {report.pos - report.neg, report.neg};
}

}  // namespace polystab
