#include "polystab/analysis.hpp"
#include "polystab/hankel.hpp"
#include "polystab/hodograph.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/io.hpp"
#include "polystab/lorenz.hpp"
#include "polystab/stieltjes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace polystab;

ComplexPolynomial poly_from(const std::vector<std::string>& coeffs) {
    std::vector<CRat> c;
    c.reserve(coeffs.size());
    for (const std::string& tok : coeffs) c.push_back(parse_coefficient(tok));
    if (!c.empty() && c.front().is_zero())
        throw std::invalid_argument("leading coefficient is zero");
    ComplexPolynomial p(std::move(c));
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    return p;
}

Polynomial real_poly_from(const std::vector<std::string>& coeffs) {
    ComplexPolynomial p = poly_from(coeffs);
    if (!p.is_real()) throw std::invalid_argument("expected real coefficients");
    return p.as_real();
}

std::vector<std::string> strings(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Rat& x : xs) out.push_back(to_string(x));
    return out;
}

py::dict dist_dict(const RootDistribution& d) {
    py::dict out;
    out["n_minus"] = d.n_minus;
    out["n_plus"] = d.n_plus;
    out["axis_count"] = d.axis_count;
    out["axis"] = to_string(d.axis_kind);
    if (d.pair_omega_squared) out["axis_omega_squared"] = to_string(*d.pair_omega_squared);
    if (d.axis_gcd) out["axis_gcd"] = strings(d.axis_gcd->coefficients());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact polynomial stability analysis (coefficients as rational strings, "
              "descending degree order)";

    m.def(
        "is_stable",
        [](const std::vector<std::string>& coeffs) { return is_stable(real_poly_from(coeffs)); },
        py::arg("coeffs"), "Routh stability test");

    m.def(
        "routh_array",
        [](const std::vector<std::string>& coeffs) {
            const RouthOutcome out = routh_array(real_poly_from(coeffs));
            py::dict d;
            d["completed"] = out.completed;
            d["h"] = strings(out.h);
            d["negated"] = out.negated;
            return d;
        },
        py::arg("coeffs"), "Leading-coefficient array of the Routh scheme");

    m.def(
        "classify",
        [](const std::vector<std::string>& coeffs) {
            const StabilityClass cls = classify(real_poly_from(coeffs));
            py::dict d = dist_dict(cls.distribution);
            d["kind"] = to_string(cls.kind);
            return d;
        },
        py::arg("coeffs"), "Stability classification with the root distribution");

    m.def(
        "distribution",
        [](const std::vector<std::string>& coeffs, const std::string& method) {
            return dist_dict(distribution_via(poly_from(coeffs), method_from_string(method)));
        },
        py::arg("coeffs"), py::arg("method") = "sturm",
        "Root distribution by the chosen method (routh|hurwitz|sturm|hankel|cf)");

    m.def(
        "crosscheck",
        [](const std::vector<std::string>& coeffs) {
            const CrossCheck check = crosscheck(poly_from(coeffs));
            py::list results;
            for (const MethodResult& res : check.results) {
                py::dict r;
                r["method"] = to_string(res.method);
                r["applicable"] = res.applicable;
                if (!res.note.empty()) r["note"] = res.note;
                if (res.applicable) r["distribution"] = dist_dict(res.distribution);
                results.append(std::move(r));
            }
            py::dict d;
            d["agree"] = check.agree;
            d["results"] = std::move(results);
            return d;
        },
        py::arg("coeffs"), "Run every applicable method and compare the answers");

    m.def(
        "hurwitz_minors",
        [](const std::vector<std::string>& coeffs) {
            return strings(leading_minors(real_poly_from(coeffs)).minors);
        },
        py::arg("coeffs"), "Leading principal minors of the Hurwitz matrix");

    m.def(
        "markov_parameters",
        [](const std::vector<std::string>& num, const std::vector<std::string>& den,
           int count) {
            const RationalFunction r(real_poly_from(num), real_poly_from(den));
            return strings(markov_parameters(r, count).s);
        },
        py::arg("num"), py::arg("den"), py::arg("count"),
        "Expansion coefficients of num/den at infinity");

    m.def(
        "stieltjes_terms",
        [](const std::vector<std::string>& num, const std::vector<std::string>& den) {
            const RationalFunction r(real_poly_from(num), real_poly_from(den));
            std::vector<std::vector<std::string>> out;
            for (const Polynomial& d : cf_expand(r).terms) out.push_back(strings(d.coefficients()));
            return out;
        },
        py::arg("num"), py::arg("den"),
        "Partial quotients of the continued-fraction expansion of num/den");

    m.def(
        "winding",
        [](const std::vector<std::string>& coeffs) {
            const WindingSummary w = winding_increment(poly_from(coeffs));
            py::dict d;
            d["delta_over_pi"] = w.delta_over_pi;
            d["crossing_indices"] = w.crossing_indices;
            return d;
        },
        py::arg("coeffs"), "Exact winding increment of the hodograph, in units of pi");

    m.def(
        "hodograph_csv",
        [](const std::vector<std::string>& coeffs, int points) {
            return emit(sample_curve(poly_from(coeffs), points), PlotFormat::Csv);
        },
        py::arg("coeffs"), py::arg("points") = 2000, "Curve samples as CSV text");

    m.def(
        "hodograph_svg",
        [](const std::vector<std::string>& coeffs, int points) {
            return emit(sample_curve(poly_from(coeffs), points), PlotFormat::Svg);
        },
        py::arg("coeffs"), py::arg("points") = 2000, "Curve samples as an SVG drawing");

    m.def(
        "lorenz",
        [](const std::string& sigma, const std::string& r, const std::string& b) {
            const LorenzAnalysis a =
                lorenz_analyze({parse_rational(sigma), parse_rational(r), parse_rational(b)});
            py::dict d;
            d["fixed_points"] = a.fixed_point_count;
            d["wing_radicand"] = to_string(a.wing_radicand);
            d["origin_classification"] = to_string(a.origin_verdict.kind);
            if (a.wing_verdict) d["wing_classification"] = to_string(a.wing_verdict->kind);
            if (a.wing_poly) d["wing_polynomial"] = strings(a.wing_poly->coefficients());
            d["r_star"] = a.r_star ? py::object(py::str(to_string(*a.r_star)))
                                   : py::object(py::none());
            return d;
        },
        py::arg("sigma"), py::arg("r"), py::arg("b"),
        "Lorenz fixed-point stability analysis (exact rational parameters)");
}
