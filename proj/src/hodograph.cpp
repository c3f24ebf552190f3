#include "polystab/hodograph.hpp"

#include "polystab/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polystab {

WindingSummary winding_increment(const ComplexPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("winding of the zero polynomial");
    WindingSummary out;
    if (p.degree() == 0) return out;
    const detail::SplitParts parts = detail::analyze_split(p);
    if (parts.axis_count > 0) throw AxisRootsPresent(parts.axis_gcd);
    const RationalFunction& r = parts.reduced;
    if (r.is_zero()) return out;
    // Crossings of the imaginary axis happen at the odd-multiplicity real
    // roots of f0; the turn direction there is the Cauchy index of f1/f0
    // over a bracket isolating that root.
    for (const auto& [a, b] : isolate_real_roots(r.den())) {
        const int idx = cauchy_index_interval(r, a, b);
        if (idx != 0) out.crossing_indices.push_back(idx);
    }
    out.delta_over_pi = 0;
    for (int idx : out.crossing_indices) out.delta_over_pi += idx;
    return out;
}

WindingSummary winding_increment(const Polynomial& p) {
    return winding_increment(ComplexPolynomial(p));
}

std::vector<HodographSample> sample_curve(const ComplexPolynomial& p, int points) {
    if (p.is_zero()) throw std::domain_error("cannot sample the zero polynomial");
    if (points < 2) throw std::domain_error("need at least two sample points");
    const auto [f0, f1] = imaginary_axis_split(p);
    const double window =
        f0.degree() >= 1 ? 2.0 * to_double(cauchy_root_bound(f0)) : 1.0;
    std::vector<HodographSample> samples;
    samples.reserve(static_cast<size_t>(points));
    // Tangent warp: uniform in t, denser around omega = 0.
    const double warp = 1.2;
    const double scale = window / std::tan(warp);
    for (int i = 0; i < points; ++i) {
        const double t = -1.0 + 2.0 * static_cast<double>(i) / (points - 1);
        const double omega = scale * std::tan(warp * t);
        samples.push_back({omega, f0.eval_double(omega), -f1.eval_double(omega)});
    }
    return samples;
}

namespace {

std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string emit_csv(const std::vector<HodographSample>& samples) {
    std::ostringstream os;
    os << "omega,re,im\n";
    for (const HodographSample& s : samples)
        os << format_sig(s.omega) << "," << format_sig(s.re) << "," << format_sig(s.im)
           << "\n";
    return os.str();
}

std::string emit_svg(const std::vector<HodographSample>& samples) {
    double lo_x = samples[0].re, hi_x = samples[0].re;
    double lo_y = samples[0].im, hi_y = samples[0].im;
    for (const HodographSample& s : samples) {
        lo_x = std::min(lo_x, s.re);
        hi_x = std::max(hi_x, s.re);
        lo_y = std::min(lo_y, s.im);
        hi_y = std::max(hi_y, s.im);
    }
    lo_x = std::min(lo_x, 0.0);
    lo_y = std::min(lo_y, 0.0);
    hi_x = std::max(hi_x, 0.0);
    hi_y = std::max(hi_y, 0.0);
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double margin = 0.05 * span;
    const double unit = 760.0 / (span + 2 * margin);
    const double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
    auto map_x = [&](double x) { return 400.0 + (x - cx) * unit; };
    auto map_y = [&](double y) { return 400.0 - (y - cy) * unit; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    os << "  <line x1=\"0\" y1=\"" << format_sig(map_y(0)) << "\" x2=\"800\" y2=\""
       << format_sig(map_y(0)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << format_sig(map_x(0)) << "\" y1=\"0\" x2=\""
       << format_sig(map_x(0)) << "\" y2=\"800\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"#1a6fb0\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < samples.size(); ++i) {
        if (i) os << " ";
        os << format_sig(map_x(samples[i].re)) << "," << format_sig(map_y(samples[i].im));
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

}  // namespace

std::string emit(const std::vector<HodographSample>& samples, PlotFormat format) {
    if (samples.empty()) throw std::domain_error("no samples to emit");
    return format == PlotFormat::Csv ? emit_csv(samples) : emit_svg(samples);
}

}  // namespace polystab
