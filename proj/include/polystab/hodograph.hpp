#pragma once

#include "polystab/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

/// One floating-point point of the curve i^{-n} p(iw).
struct HodographSample {
    double omega = 0.0;
    double re = 0.0;
    double im = 0.0;
};

/// Exact winding data of the curve: the total argument increment divided by
/// pi, together with the +-1 turning direction at each crossing of the
/// imaginary axis, in increasing order of the crossing parameter.
struct WindingSummary {
    int delta_over_pi = 0;
    std::vector<int> crossing_indices;
};

/// Thrown when the winding increment is requested for a polynomial with
/// imaginary-axis roots; carries the offending split-pair gcd.
struct AxisRootsPresent : std::domain_error {
    explicit AxisRootsPresent(Polynomial gcd)
        : std::domain_error("polynomial has roots on the imaginary axis"),
          axis_gcd(std::move(gcd)) {}
    Polynomial axis_gcd;
};

/// Exact winding increment via crossing indices (no floating point). The sum
/// of the indices equals n_minus - n_plus. Throws AxisRootsPresent when the
/// split-pair gcd has real roots, std::domain_error on the zero polynomial.
WindingSummary winding_increment(const ComplexPolynomial& p);
WindingSummary winding_increment(const Polynomial& p);

/// Floating-point samples of the curve over a symmetric window twice the
/// root bound of f0 wide, spaced by a tangent warp so both the crossings and
/// the run-out toward the horizontal asymptote are resolved. points >= 2.
std::vector<HodographSample> sample_curve(const ComplexPolynomial& p, int points);

enum class PlotFormat { Csv, Svg };

/// CSV with an "omega,re,im" header (12 significant digits), or an SVG with a
/// single auto-scaled polyline and axes through the origin. Samples must be
/// nonempty.
std::string emit(const std::vector<HodographSample>& samples, PlotFormat format);

}  // namespace polystab
