#pragma once

#include "polystab/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polystab {

/// Result of the Routh elimination scheme run on the coefficient array.
struct RouthOutcome {
    /// True when the elimination ran through; h then holds the leading
    /// coefficients h_0..h_n of the underlying remainder sequence, of which
    /// only the last two may be zero.
    bool completed = false;
    std::vector<Rat> h;
    /// Input had a negative leading coefficient and was negated first.
    bool negated = false;
};

/// How a polynomial meets the imaginary axis, as far as the completed Routh
/// array can tell.
enum class AxisKind {
    None,           // no roots on the axis
    SimpleZero,     // one simple root at 0
    ConjugatePair,  // two simple roots at +-iw, w != 0
    DoubleZero,     // one double root at 0
    FromGcd,        // general case, described by the split-pair gcd
};

struct RootDistribution {
    int n_minus = 0;
    int n_plus = 0;
    AxisKind axis_kind = AxisKind::None;
    int axis_count = 0;
    /// w^2 for the ConjugatePair case.
    std::optional<Rat> pair_omega_squared;
    /// Monic gcd of the split pair for the FromGcd case.
    std::optional<Polynomial> axis_gcd;
};

enum class StabilityKind {
    Stable,
    UnstableOffAxis,
    SimpleZeroRoot,
    ConjugatePairOnAxis,
    DoubleZeroRoot,
    Inconclusive,  // Routh array incomplete; distribution filled in by the Sturm path
};

struct StabilityClass {
    StabilityKind kind = StabilityKind::Inconclusive;
    RootDistribution distribution;
};

std::string to_string(StabilityKind kind);
std::string to_string(AxisKind kind);

/// The Routh routine: strided in-place elimination on the coefficient array.
/// Requires deg p >= 1 (the leading sign is normalized internally).
RouthOutcome routh_array(const Polynomial& p);

/// Classification of the root distribution from the completed Routh array,
/// covering the regular case and the degenerate tail cases (simple or double
/// root at 0, one conjugate pair on the axis). An incomplete array falls back
/// to the Sturm half-plane split and is marked Inconclusive.
StabilityClass classify(const Polynomial& p);

/// True iff the array completes with all h_k strictly positive (after leading
/// sign normalization); equivalent to all roots lying in Re z < 0.
bool is_stable(const Polynomial& p);

}  // namespace polystab
