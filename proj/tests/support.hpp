#pragma once

// Shared test utilities: seeded random generators for rationals, polynomials
// with known root distributions, rational functions, and the floating-point
// companion-matrix eigenvalue oracle used as independent ground truth.

#include "polystab/polynomial.hpp"
#include "polystab/rational_function.hpp"
#include "polystab/stieltjes.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <random>
#include <vector>

namespace polystab::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat random_rat(Rng& rng, int max_num = 6, int max_den = 4) {
    return Rat(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

inline Rat random_nonzero_rat(Rng& rng, int max_num = 6, int max_den = 4) {
    for (;;) {
        Rat r = random_rat(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

inline Rat random_positive_rat(Rng& rng, int max_num = 6, int max_den = 4) {
    return Rat(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
}

/// Random dense polynomial of exactly the given degree.
inline Polynomial random_poly(Rng& rng, int degree, int max_num = 6, int max_den = 4) {
    std::vector<Rat> c;
    c.push_back(random_nonzero_rat(rng, max_num, max_den));
    for (int i = 0; i < degree; ++i) c.push_back(random_rat(rng, max_num, max_den));
    return Polynomial(std::move(c));
}

/// Random reduced rational function with deg num < deg den = denominator_degree.
inline RationalFunction random_proper_rf(Rng& rng, int denominator_degree) {
    for (;;) {
        Polynomial den = random_poly(rng, denominator_degree);
        Polynomial num =
            denominator_degree == 0
                ? Polynomial{}
                : random_poly(rng, uniform_int(rng, 0, denominator_degree - 1));
        RationalFunction r(num, den);
        if (!r.is_zero() && r.den().degree() == denominator_degree) return r;
    }
}

struct KnownCounts {
    int n_minus = 0;
    int n_plus = 0;
    int axis = 0;
};

struct FactoredReal {
    Polynomial p;
    KnownCounts counts;
};

/// Product of rational linear and quadratic factors with known half-plane
/// membership; may include roots at 0 and conjugate pairs +-iw when
/// allow_axis is set (including repeated axis factors).
inline FactoredReal random_factored_real(Rng& rng, int max_degree, bool allow_axis) {
    FactoredReal out;
    out.p = Polynomial::constant(random_positive_rat(rng));
    int degree_left = uniform_int(rng, 1, max_degree);
    while (degree_left > 0) {
        const int choice = uniform_int(rng, 0, allow_axis ? 5 : 3);
        if (choice <= 1) {  // real root
            const Rat lambda = random_nonzero_rat(rng);
            out.p = out.p * Polynomial{Rat(1), -lambda};
            (lambda < 0 ? out.counts.n_minus : out.counts.n_plus) += 1;
            degree_left -= 1;
        } else if (choice <= 3 && degree_left >= 2) {  // complex pair u +- iv
            const Rat u = random_nonzero_rat(rng);
            const Rat v = random_nonzero_rat(rng);
            out.p = out.p * Polynomial{Rat(1), -2 * u, u * u + v * v};
            (u < 0 ? out.counts.n_minus : out.counts.n_plus) += 2;
            degree_left -= 2;
        } else if (choice == 4) {  // root at 0
            out.p = out.p * Polynomial{Rat(1), Rat(0)};
            out.counts.axis += 1;
            degree_left -= 1;
        } else if (degree_left >= 2) {  // pair +-iv
            const Rat v = random_nonzero_rat(rng);
            out.p = out.p * Polynomial{Rat(1), Rat(0), v * v};
            out.counts.axis += 2;
            degree_left -= 2;
        }
    }
    return out;
}

struct FactoredComplex {
    ComplexPolynomial p;
    KnownCounts counts;
};

/// Product of linear factors z - (u + iv) with rational parts.
inline FactoredComplex random_factored_complex(Rng& rng, int max_degree, bool allow_axis) {
    FactoredComplex out;
    std::vector<CRat> unit{CRat(random_nonzero_rat(rng), random_rat(rng))};
    out.p = ComplexPolynomial(std::move(unit));
    const int degree = uniform_int(rng, 1, max_degree);
    for (int i = 0; i < degree; ++i) {
        Rat u = allow_axis && uniform_int(rng, 0, 3) == 0 ? Rat(0) : random_nonzero_rat(rng);
        const CRat root(u, random_rat(rng));
        std::vector<CRat> factor{CRat(Rat(1)), -root};
        out.p = out.p * ComplexPolynomial(std::move(factor));
        if (u < 0)
            out.counts.n_minus += 1;
        else if (u > 0)
            out.counts.n_plus += 1;
        else
            out.counts.axis += 1;
    }
    return out;
}

/// Random stable polynomial: positive scalar times factors z + a and
/// z^2 + bz + c with a, b, c > 0.
inline Polynomial random_stable_poly(Rng& rng, int max_degree) {
    Polynomial p = Polynomial::constant(random_positive_rat(rng));
    int degree_left = uniform_int(rng, 1, max_degree);
    while (degree_left > 0) {
        if (degree_left >= 2 && uniform_int(rng, 0, 1) == 0) {
            p = p * Polynomial{Rat(1), random_positive_rat(rng), random_positive_rat(rng)};
            degree_left -= 2;
        } else {
            p = p * Polynomial{Rat(1), random_positive_rat(rng)};
            degree_left -= 1;
        }
    }
    return p;
}

/// Random element of the unimodular group, built from elementary shears and
/// the quarter turn so the determinant stays exactly 1.
inline Mobius random_mobius(Rng& rng) {
    Rat a(1), b(0), c(0), d(1);
    const int steps = uniform_int(rng, 1, 5);
    for (int i = 0; i < steps; ++i) {
        const int k = uniform_int(rng, -4, 4);
        switch (uniform_int(rng, 0, 2)) {
            case 0:  // [[1,k],[0,1]] * M
                a += k * c;
                b += k * d;
                break;
            case 1:  // [[1,0],[k,1]] * M
                c += k * a;
                d += k * b;
                break;
            default: {  // [[0,-1],[1,0]] * M
                std::swap(a, c);
                std::swap(b, d);
                a = -a;
                b = -b;
                break;
            }
        }
    }
    return {a, b, c, d};
}

struct OracleCounts {
    int n_minus = 0;
    int n_plus = 0;
    int axis = 0;
};

/// Floating-point ground truth: eigenvalues of the companion matrix.
/// Real parts within tol of zero are counted as axis roots.
inline OracleCounts eigenvalue_oracle(const Polynomial& p, double tol = 1e-8) {
    const int n = p.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        companion(0, i) = -to_double(Rat(p.coefficients()[static_cast<size_t>(i + 1)] /
                                         p.leading()));
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    OracleCounts counts;
    for (int i = 0; i < n; ++i) {
        const double re = solver.eigenvalues()(i).real();
        if (re < -tol)
            counts.n_minus += 1;
        else if (re > tol)
            counts.n_plus += 1;
        else
            counts.axis += 1;
    }
    return counts;
}

}  // namespace polystab::testing
