#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/rational_function.hpp"

#include <vector>

namespace polystab {

/// Partial quotients d_1..d_m of the sign-flipped Euclidean algorithm run on
/// (den, num): R = 1/(d_1 - 1/(d_2 - ... - 1/d_m)).
struct ContinuedFraction {
    std::vector<Polynomial> terms;
};

/// Expansion of R, deg num < deg den. The quotient degrees sum to deg den.
ContinuedFraction cf_expand(const RationalFunction& R);

/// Rebuilds the rational function from its quotients (inverse of cf_expand).
RationalFunction cf_reconstruct(const ContinuedFraction& cf);

/// Projective-line Cauchy index of the expanded function: minus the sum of
/// the quotients' indices at infinity (an odd-degree quotient with leading
/// coefficient c contributes sign c, an even-degree one contributes 0).
int index_from_cf(const ContinuedFraction& cf);

/// True iff the expansion consists of exactly deg den linear quotients with
/// strictly positive leading coefficients.
bool is_proper_via_cf(const RationalFunction& R);

/// Decomposition R = sum alpha_k / (z - w_k) over simple rational poles,
/// sorted by pole. Throws std::domain_error when the denominator has a
/// repeated or non-rational root.
struct PartialFractions {
    std::vector<Rat> poles;
    std::vector<Rat> residues;
};

PartialFractions partial_fractions_simple(const RationalFunction& R);

/// Stability test through the axis split pair: the roots of f0 and f1 must be
/// real and simple with the roots of f1 separating those of f0, with the
/// orientation fixed by f1'f0 - f0'f1 < 0. Agrees with the Routh verdict.
bool hermite_biehler(const Polynomial& p);

/// Unimodular fractional-linear map w -> (a*w + b)/(c*w + d), ad - bc = 1.
struct Mobius {
    Rat a, b, c, d;

    Mobius(Rat a_, Rat b_, Rat c_, Rat d_);
    static Mobius identity() { return {1, 0, 0, 1}; }
};

/// Left action on the value: (a*R + b)/(c*R + d), reduced. Throws
/// std::domain_error when the image degenerates (denominator identically 0).
RationalFunction mobius_apply(const Mobius& m, const RationalFunction& R);

}  // namespace polystab
