#include "polystab/lorenz.hpp"

#include <stdexcept>

namespace polystab {

Polynomial lorenz_wing_polynomial(const LorenzParams& params) {
    const Rat& s = params.sigma;
    const Rat& r = params.r;
    const Rat& b = params.b;
    return Polynomial{Rat(1), s + b + 1, b * (s + r), 2 * s * b * (r - 1)};
}

LorenzAnalysis lorenz_analyze(const LorenzParams& params) {
    if (params.sigma <= 0 || params.r <= 0 || params.b <= 0)
        throw std::domain_error("Lorenz parameters must be strictly positive");
    const Rat& s = params.sigma;
    const Rat& r = params.r;
    const Rat& b = params.b;
    LorenzAnalysis out;
    out.wing_radicand = b * (r - 1);
    out.fixed_point_count = r > 1 ? 3 : 1;
    out.origin_linear_root = -b;
    out.origin_quadratic = Polynomial{Rat(1), s + 1, s * (1 - r)};
    out.origin_verdict = classify(out.origin_quadratic);
    if (r > 1) {
        out.wing_poly = lorenz_wing_polynomial(params);
        out.wing_verdict = classify(*out.wing_poly);
    }
    if (s > b + 1) out.r_star = s * (s + b + 3) / (s - b - 1);
    return out;
}

}  // namespace polystab
