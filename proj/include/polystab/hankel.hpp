#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/rational_function.hpp"

#include <vector>

namespace polystab {

/// Coefficients of the expansion of a rational function at infinity:
/// R = polynomial_part + s_0/z + s_1/z^2 + ...
struct MarkovSequence {
    Polynomial polynomial_part;
    std::vector<Rat> s;
};

/// First `count` Markov parameters s_0..s_{count-1}, solved exactly from the
/// triangular coefficient relations. A numerator of higher degree than the
/// denominator is not an error; its quotient comes back as polynomial_part.
MarkovSequence markov_parameters(const RationalFunction& R, int count);

struct HankelReport {
    int rank = 0;
    int signature = 0;  // pos - neg
    int pos = 0;
    int neg = 0;
};

/// Rank and signature of the n x n Hankel matrix [s_{i+j}], i,j = 0..n-1,
/// by exact symmetric congruence reduction. Needs at least 2n-1 entries.
HankelReport hankel_rank_signature(const std::vector<Rat>& s, int n);
HankelReport hankel_rank_signature(const MarkovSequence& seq, int n);

/// Leading principal minors det[s_{i+j}], k = 1..n.
std::vector<Rat> hankel_leading_minors(const std::vector<Rat>& s, int n);
/// Shifted minors det[s_{i+j+1}], k = 1..n.
std::vector<Rat> hankel_shifted_minors(const std::vector<Rat>& s, int n);

/// True iff all n leading principal Hankel minors are strictly positive,
/// which for deg num < deg den = n is the same as the Cauchy line index
/// reaching n. Requires deg num < deg den.
bool is_proper_via_hankel(const RationalFunction& R);

/// Power sums of the roots of f (with multiplicity), s_0..s_{count-1},
/// computed from the expansion of f'/f rather than from the roots.
MarkovSequence newton_sums(const Polynomial& f, int count);

struct RootTypeCount {
    int distinct_real = 0;
    int distinct_conjugate_pairs = 0;
};

/// Root classification from the signature of the Newton-sum Hankel form:
/// positive squares count distinct roots, negative squares count distinct
/// conjugate pairs. Requires f real with deg f >= 1.
RootTypeCount borchardt_jacobi(const Polynomial& f);

}  // namespace polystab
