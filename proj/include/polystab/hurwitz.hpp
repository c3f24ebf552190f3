#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/rational_function.hpp"
#include "polystab/routh.hpp"

#include <vector>

namespace polystab {

using Matrix = std::vector<std::vector<Rat>>;

/// Exact determinant (Gaussian elimination with pivoting over the rationals).
Rat determinant(Matrix m);

/// The n x n band matrix of alternating odd/even coefficient runs; entry
/// (i, j) is a_{2j-i} (1-based), out-of-range indices zero. Requires deg >= 1.
Matrix hurwitz_matrix(const Polynomial& p);

struct HurwitzReport {
    std::vector<Rat> minors;  // leading principal minors eta_1..eta_n
    bool stable = false;      // all minors strictly positive
    /// a_0, eta_1, eta_2/eta_1, ..., filled as far as the quotients exist.
    std::vector<Rat> quotient_sequence;
};

/// All leading principal minors, exactly. A single elimination sweep yields
/// them as pivot products; minors past a zero pivot are computed directly.
HurwitzReport leading_minors(const Polynomial& p);

/// True iff every leading principal minor of the Hurwitz matrix is positive.
bool hurwitz_stable(const Polynomial& p);

/// Root count from sign variations of the minor quotient sequence. Requires
/// every minor nonzero (throws std::domain_error pointing at classify
/// otherwise); such polynomials have no imaginary-axis roots.
RootDistribution distribution_from_minors(const Polynomial& p);

/// Stability via positive coefficients plus every other Hurwitz minor.
bool lienard_chipart(const Polynomial& p);

struct ResultantMinors {
    std::vector<Rat> values;  // interleaved determinants of orders 2, 4, ..., 2n
};

/// The 2k x 2k interleaved-row determinants of the pair (num, den), num and
/// den aligned to deg den = n (num padded with leading zeros). Unlike most of
/// the library this works on the raw pair: a common factor is what drives the
/// final determinant to zero. Requires deg num <= deg den and den nonzero.
ResultantMinors resultant_minors(const Polynomial& num, const Polynomial& den);
ResultantMinors resultant_minors(const RationalFunction& R);

}  // namespace polystab
