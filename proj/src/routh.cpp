#include "polystab/routh.hpp"

#include "polystab/sturm.hpp"

#include <stdexcept>

namespace polystab {

std::string to_string(StabilityKind kind) {
    switch (kind) {
        case StabilityKind::Stable: return "stable";
        case StabilityKind::UnstableOffAxis: return "unstable";
        case StabilityKind::SimpleZeroRoot: return "simple zero root";
        case StabilityKind::ConjugatePairOnAxis: return "conjugate pair on axis";
        case StabilityKind::DoubleZeroRoot: return "double zero root";
        case StabilityKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(AxisKind kind) {
    switch (kind) {
        case AxisKind::None: return "none";
        case AxisKind::SimpleZero: return "simple root at 0";
        case AxisKind::ConjugatePair: return "conjugate pair +-iw";
        case AxisKind::DoubleZero: return "double root at 0";
        case AxisKind::FromGcd: return "roots of the split-pair gcd";
    }
    return "?";
}

RouthOutcome routh_array(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("Routh scheme requires degree >= 1");
    RouthOutcome out;
    out.h = p.coefficients();
    if (out.h[0] < 0) {
        for (Rat& x : out.h) x = -x;
        out.negated = true;
    }
    const int n = p.degree();
    // Direct transcription of the elimination loop. h[n] is never written;
    // h[n-1] and h[n] are the only entries allowed to end up zero.
    int k = 1;
    while (k < n - 1 && out.h[static_cast<size_t>(k)] != 0) {
        const Rat c = out.h[static_cast<size_t>(k - 1)] / out.h[static_cast<size_t>(k)];
        ++k;
        for (int j = k; j < n; j += 2)
            out.h[static_cast<size_t>(j)] -= c * out.h[static_cast<size_t>(j + 1)];
    }
    out.completed = k >= n - 1;  // k == n-1 for n >= 2; degree 1 needs no pass
    return out;
}

namespace {

std::vector<Rat> prefix(const std::vector<Rat>& h, size_t len) {
    return {h.begin(), h.begin() + static_cast<long>(len)};
}

}  // namespace

StabilityClass classify(const Polynomial& p) {
    const RouthOutcome out = routh_array(p);
    const int n = p.degree();
    StabilityClass result;
    if (!out.completed) {
        // The array stalled on an interior zero; the Sturm machinery still
        // answers the distribution question.
        result.kind = StabilityKind::Inconclusive;
        const HalfPlaneSplit split = half_plane_split(p);
        result.distribution.n_minus = split.n_minus;
        result.distribution.n_plus = split.n_plus;
        result.distribution.axis_count = split.axis_count;
        result.distribution.axis_kind =
            split.axis_count == 0 ? AxisKind::None : AxisKind::FromGcd;
        result.distribution.axis_gcd = split.imaginary_axis_gcd;
        return result;
    }
    const std::vector<Rat>& h = out.h;
    const Rat& last = h[static_cast<size_t>(n)];
    const Rat& penultimate = h[static_cast<size_t>(n - 1)];
    RootDistribution& d = result.distribution;
    if (penultimate != 0 && last != 0) {
        d.n_plus = sign_changes(h);
        d.n_minus = n - d.n_plus;
        d.axis_kind = AxisKind::None;
        result.kind = d.n_plus == 0 ? StabilityKind::Stable : StabilityKind::UnstableOffAxis;
    } else if (penultimate != 0) {  // last == 0
        d.n_plus = sign_changes(prefix(h, static_cast<size_t>(n)));
        d.n_minus = n - 1 - d.n_plus;
        d.axis_kind = AxisKind::SimpleZero;
        d.axis_count = 1;
        result.kind = StabilityKind::SimpleZeroRoot;
    } else {
        const Rat& before = h[static_cast<size_t>(n - 2)];
        const int v = sign_changes(prefix(h, static_cast<size_t>(n - 1)));
        if (last != 0 && sign(before) * sign(last) < 0) {
            d.n_plus = v + 1;
            d.n_minus = n - v - 1;
            d.axis_kind = AxisKind::None;
            result.kind = StabilityKind::UnstableOffAxis;
        } else if (last != 0) {  // before*last > 0
            d.n_plus = v;
            d.n_minus = n - 2 - v;
            d.axis_kind = AxisKind::ConjugatePair;
            d.axis_count = 2;
            d.pair_omega_squared = last / before;
            result.kind = StabilityKind::ConjugatePairOnAxis;
        } else {  // penultimate == last == 0
            d.n_plus = v;
            d.n_minus = n - 2 - v;
            d.axis_kind = AxisKind::DoubleZero;
            d.axis_count = 2;
            result.kind = StabilityKind::DoubleZeroRoot;
        }
    }
    return result;
}

bool is_stable(const Polynomial& p) {
    const RouthOutcome out = routh_array(p);
    if (!out.completed) return false;
    for (const Rat& x : out.h)
        if (x <= 0) return false;
    return true;
}

}  // namespace polystab
