#include "polystab/hurwitz.hpp"

#include "polystab/sturm.hpp"

#include <stdexcept>

namespace polystab {

Rat determinant(Matrix m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

Matrix hurwitz_matrix(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("Hurwitz matrix requires degree >= 1");
    const int n = p.degree();
    Matrix m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int k = 2 * j - i;
            if (k >= 0 && k <= n)
                m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                    p.coefficients()[static_cast<size_t>(k)];
        }
    return m;
}

namespace {

Rat leading_minor_direct(const Matrix& m, int k) {
    Matrix sub(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return determinant(std::move(sub));
}

Polynomial normalized_sign(const Polynomial& p) {
    return p.leading() < 0 ? -p : p;
}

}  // namespace

HurwitzReport leading_minors(const Polynomial& p) {
    const Polynomial q = normalized_sign(p);
    const Matrix original = hurwitz_matrix(q);
    const int n = q.degree();
    HurwitzReport report;
    report.minors.reserve(static_cast<size_t>(n));
    // Row reduction without pivoting keeps every leading minor equal to the
    // product of the pivots produced so far; a zero pivot stops the sweep and
    // the remaining minors are evaluated one by one.
    Matrix work = original;
    Rat product(1);
    int done = 0;
    for (int col = 0; col < n; ++col) {
        const Rat& pivot = work[static_cast<size_t>(col)][static_cast<size_t>(col)];
        product *= pivot;
        report.minors.push_back(product);
        ++done;
        if (pivot == 0) break;
        for (int row = col + 1; row < n; ++row) {
            const Rat& head = work[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (head == 0) continue;
            const Rat factor = head / pivot;
            for (int j = col; j < n; ++j)
                work[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    factor * work[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    for (int k = done + 1; k <= n; ++k)
        report.minors.push_back(leading_minor_direct(original, k));
    report.stable = true;
    for (const Rat& eta : report.minors)
        if (eta <= 0) report.stable = false;
    report.quotient_sequence.push_back(q.leading());
    Rat prev(1);
    for (const Rat& eta : report.minors) {
        if (prev == 0) break;
        report.quotient_sequence.push_back(eta / prev);
        prev = eta;
    }
    return report;
}

bool hurwitz_stable(const Polynomial& p) { return leading_minors(p).stable; }

RootDistribution distribution_from_minors(const Polynomial& p) {
    const HurwitzReport report = leading_minors(p);
    for (const Rat& eta : report.minors)
        if (eta == 0)
            throw std::domain_error(
                "a Hurwitz minor vanishes; the quotient-sequence count does not apply "
                "(use the Routh classification instead)");
    RootDistribution d;
    const int n = p.degree();
    d.n_plus = sign_changes(report.quotient_sequence);
    d.n_minus = n - d.n_plus;
    d.axis_kind = AxisKind::None;
    return d;
}

bool lienard_chipart(const Polynomial& p) {
    const Polynomial q = normalized_sign(p);
    const int n = q.degree();
    for (const Rat& a : q.coefficients())
        if (a <= 0) return false;
    const HurwitzReport report = leading_minors(q);
    // Every other minor, ending at eta_{n-1}: even indices for odd n, odd
    // indices for even n. Positivity of the rest follows from the
    // coefficient signs.
    for (int k = n - 1; k >= 1; k -= 2)
        if (report.minors[static_cast<size_t>(k - 1)] <= 0) return false;
    return true;
}

ResultantMinors resultant_minors(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("resultant minors need a nonzero denominator");
    const int n = den.degree();
    if (!num.is_zero() && num.degree() > n)
        throw std::domain_error("resultant minors require deg num <= deg den");
    // Coefficient rows aligned to degree n; b gets leading zeros when the
    // numerator has lower degree. Indices past n are zero.
    auto coeff = [n](const Polynomial& f, int j) -> Rat {
        return j > n ? Rat(0) : f.coefficient(n - j);
    };
    ResultantMinors out;
    for (int k = 1; k <= n; ++k) {
        const int dim = 2 * k;
        Matrix m(static_cast<size_t>(dim), std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
        for (int shift = 0; shift < k; ++shift)
            for (int j = shift; j < dim; ++j) {
                m[static_cast<size_t>(2 * shift)][static_cast<size_t>(j)] =
                    coeff(den, j - shift);
                m[static_cast<size_t>(2 * shift + 1)][static_cast<size_t>(j)] =
                    coeff(num, j - shift);
            }
        out.values.push_back(determinant(std::move(m)));
    }
    return out;
}

ResultantMinors resultant_minors(const RationalFunction& R) {
    return resultant_minors(R.num(), R.den());
}

}  // namespace polystab
