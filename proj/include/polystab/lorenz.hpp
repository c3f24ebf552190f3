#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/routh.hpp"

#include <optional>

namespace polystab {

struct LorenzParams {
    Rat sigma;
    Rat r;
    Rat b;
};

/// Linearized stability data of the Lorenz system at its fixed points, all of
/// it exact. The nonzero fixed points (+-sqrt(b(r-1)), +-sqrt(b(r-1)), r-1)
/// exist for r > 1 and are reported through the radicand b(r-1); only the
/// characteristic polynomials, which are rational in the parameters, feed the
/// stability analysis.
struct LorenzAnalysis {
    int fixed_point_count = 1;  // 3 once r > 1
    Rat wing_radicand;          // b(r-1)

    Rat origin_linear_root;        // the factor (lambda + b) of the origin polynomial
    Polynomial origin_quadratic;   // lambda^2 + (sigma+1) lambda + sigma(1-r)
    StabilityClass origin_verdict; // classification of the quadratic factor

    std::optional<Polynomial> wing_poly;  // cubic at the nonzero pair, when present
    std::optional<StabilityClass> wing_verdict;

    /// Critical value of r for the nonzero pair; empty means +infinity
    /// (never lost for sigma <= b + 1).
    std::optional<Rat> r_star;
};

/// Characteristic polynomial of the linearization at the nonzero fixed points
/// (valid for any parameters; meaningful for r > 1).
Polynomial lorenz_wing_polynomial(const LorenzParams& params);

/// Requires all three parameters strictly positive.
LorenzAnalysis lorenz_analyze(const LorenzParams& params);

}  // namespace polystab
