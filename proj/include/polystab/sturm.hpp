#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/rational_function.hpp"

#include <vector>

namespace polystab {

/// Number of strict sign alternations among the nonzero entries.
int sign_changes(const std::vector<Rat>& values);

/// Sign of f immediately to the right of a, i.e. of the first nonvanishing
/// derivative of f at a. Zero only for the zero polynomial.
int sign_right_of(const Polynomial& f, const Rat& a);
/// Sign of f immediately to the left of a.
int sign_left_of(const Polynomial& f, const Rat& a);

/// Remainder sequence of the sign-flipped Euclidean algorithm
/// f_{k-1} = d_k f_k - f_{k+1}, ending at the last nonzero remainder (which
/// divides every member). Sign-change counts of the member values compute
/// Cauchy indices.
class SturmChain {
  public:
    /// Requires f0 nonzero and (f1 zero or deg f1 < deg f0).
    static SturmChain build(Polynomial f0, Polynomial f1);

    const std::vector<Polynomial>& members() const { return polys_; }
    std::vector<Rat> leading_coefficients() const;
    /// deg f_k = deg f_0 - k for every member and the chain has full length.
    bool is_regular() const;

    int sign_changes_right_of(const Rat& a) const;  // V(a+0)
    int sign_changes_left_of(const Rat& b) const;   // V(b-0)
    int sign_changes_at(int direction) const;       // V(+inf) for +1, V(-inf) for -1

  private:
    std::vector<Polynomial> polys_;
};

/// Cauchy index of R over (a, b): the sum of +-1 jumps of R through infinity
/// at its odd-order poles inside the interval. Requires a < b and R vanishing
/// at infinity; a pole exactly at a or b is reported as std::domain_error.
int cauchy_index_interval(const RationalFunction& R, const Rat& a, const Rat& b);

/// Cauchy index over the whole real line. Accepts deg num <= deg den; a
/// constant part is split off first (it does not move any jump). For a
/// genuine pole at infinity use projective_index.
int cauchy_index_line(const RationalFunction& R);

/// +-1 jump of R through infinity at the point at infinity of the projective
/// line (nonzero only for an odd-order pole there), else 0.
int index_at_infinity(const RationalFunction& R);

/// Cauchy index on the projective line: line index of the proper part plus
/// the index at infinity. Invariant under unimodular fractional-linear maps.
int projective_index(const RationalFunction& R);

/// Number of distinct real roots of f (Cauchy index of f'/f).
int distinct_real_roots(const Polynomial& f);
/// Number of distinct real roots of f strictly inside (a, b).
int distinct_real_roots(const Polynomial& f, const Rat& a, const Rat& b);
/// Number of real roots of f counted with multiplicity.
int real_roots_with_multiplicity(const Polynomial& f);

/// Ordered disjoint open intervals, each containing exactly one distinct real
/// root of f and with non-root rational endpoints.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Polynomial& f);

/// Root counts of a polynomial relative to the imaginary axis.
struct HalfPlaneSplit {
    int n_minus = 0;  // roots with Re < 0
    int n_plus = 0;   // roots with Re > 0
    /// Monic gcd of the axis split pair; its real roots w correspond to the
    /// roots iw of p on the imaginary axis, with matching multiplicities.
    Polynomial imaginary_axis_gcd;
    int axis_count = 0;  // imaginary-axis roots, with multiplicity

    int total() const { return n_minus + n_plus + axis_count; }
};

/// Full root distribution of p relative to the imaginary axis, computed from
/// the Cauchy index of the reduced split pair plus exact accounting for axis
/// roots and for root pairs symmetric about the axis.
HalfPlaneSplit half_plane_split(const ComplexPolynomial& p);
HalfPlaneSplit half_plane_split(const Polynomial& p);

/// Same distribution, but with the Cauchy index of the reduced pair supplied
/// by the caller (used to route the computation through the Hankel signature
/// or the continued-fraction expansion instead of the Sturm chain).
template <typename IndexFn>
HalfPlaneSplit half_plane_split_with(const ComplexPolynomial& p, IndexFn&& index_of_reduced);

namespace detail {
struct SplitParts {
    Polynomial axis_gcd;
    RationalFunction reduced;  // f1/g over f0/g
    int degree = 0;
    int axis_count = 0;
    int symmetric_pairs = 0;
};
SplitParts analyze_split(const ComplexPolynomial& p);
HalfPlaneSplit assemble_split(const SplitParts& parts, int reduced_index);
}  // namespace detail

template <typename IndexFn>
HalfPlaneSplit half_plane_split_with(const ComplexPolynomial& p, IndexFn&& index_of_reduced) {
    const detail::SplitParts parts = detail::analyze_split(p);
    return detail::assemble_split(parts, index_of_reduced(parts.reduced));
}

}  // namespace polystab
