#include "polystab/cli_app.hpp"

#include "polystab/analysis.hpp"
#include "polystab/hankel.hpp"
#include "polystab/hodograph.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/io.hpp"
#include "polystab/lorenz.hpp"
#include "polystab/stieltjes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace polystab {

namespace {

using nlohmann::json;

json rat_list(const std::vector<Rat>& xs) {
    json out = json::array();
    for (const Rat& x : xs) out.push_back(to_string(x));
    return out;
}

std::string join_rats(const std::vector<Rat>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += to_string(xs[i]);
    }
    return out;
}

std::string pretty(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    const int n = p.degree();
    for (int k = 0; k <= n; ++k) {
        const Rat& a = p.coefficients()[static_cast<size_t>(k)];
        if (a == 0) continue;
        const int d = n - k;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        const Rat mag = abs(a);
        if (mag != 1 || d == 0) out += to_string(mag);
        if (d > 0) {
            if (mag != 1) out += "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

json distribution_json(const RootDistribution& d) {
    json out;
    out["n_minus"] = d.n_minus;
    out["n_plus"] = d.n_plus;
    out["axis_count"] = d.axis_count;
    out["axis"] = to_string(d.axis_kind);
    if (d.pair_omega_squared) out["axis_omega_squared"] = to_string(*d.pair_omega_squared);
    if (d.axis_gcd) out["axis_gcd"] = format_polynomial(*d.axis_gcd);
    return out;
}

std::string distribution_text(const RootDistribution& d) {
    std::ostringstream os;
    os << "n_minus: " << d.n_minus << "\nn_plus: " << d.n_plus << "\naxis roots: ";
    if (d.axis_count == 0) {
        os << "none";
    } else {
        os << d.axis_count << " (" << to_string(d.axis_kind);
        if (d.pair_omega_squared) os << ", w^2 = " << to_string(*d.pair_omega_squared);
        if (d.axis_gcd) os << ", gcd = " << pretty(*d.axis_gcd, "w");
        os << ")";
    }
    return os.str();
}

struct AppContext {
    bool json_output = false;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    void deliver(const json& j, const std::string& text) const {
        if (json_output)
            *out << j.dump(2) << "\n";
        else
            *out << text << "\n";
    }
};

Polynomial require_real(const ComplexPolynomial& p) {
    if (!p.is_real())
        throw std::domain_error("this command needs a polynomial with real coefficients");
    return p.as_real();
}

int run_stability(const AppContext& ctx, const ComplexPolynomial& cp) {
    const Polynomial p = require_real(cp);
    const RouthOutcome routh = routh_array(p);
    const StabilityClass cls = classify(p);
    const bool stable = is_stable(p);
    json j;
    j["command"] = "stability";
    j["stable"] = stable;
    j["completed"] = routh.completed;
    j["h"] = rat_list(routh.h);
    j["classification"] = to_string(cls.kind);
    j["distribution"] = distribution_json(cls.distribution);
    std::ostringstream text;
    text << "verdict: " << (stable ? "stable" : "unstable") << "\n"
         << "classification: " << to_string(cls.kind) << "\n"
         << "routh completed: " << (routh.completed ? "yes" : "no") << "\n"
         << "h: " << join_rats(routh.h) << "\n"
         << distribution_text(cls.distribution);
    ctx.deliver(j, text.str());
    return 0;
}

int run_distribution(const AppContext& ctx, const ComplexPolynomial& cp,
                     const std::string& method_name) {
    const Method method = method_from_string(method_name);
    const RootDistribution d = cp.is_real() ? distribution_via(cp.as_real(), method)
                                            : distribution_via(cp, method);
    json j;
    j["command"] = "distribution";
    j["method"] = to_string(method);
    j["distribution"] = distribution_json(d);
    std::ostringstream text;
    text << "method: " << to_string(method) << "\n" << distribution_text(d);
    ctx.deliver(j, text.str());
    return 0;
}

int run_hurwitz(const AppContext& ctx, const ComplexPolynomial& cp) {
    const Polynomial p = require_real(cp);
    const HurwitzReport report = leading_minors(p);
    json j;
    j["command"] = "hurwitz";
    j["minors"] = rat_list(report.minors);
    j["quotient_sequence"] = rat_list(report.quotient_sequence);
    j["stable"] = report.stable;
    std::ostringstream text;
    text << "minors: " << join_rats(report.minors) << "\n"
         << "quotient sequence: " << join_rats(report.quotient_sequence) << "\n"
         << "stable: " << (report.stable ? "yes" : "no");
    bool all_nonzero = true;
    for (const Rat& eta : report.minors)
        if (eta == 0) all_nonzero = false;
    if (all_nonzero) {
        const RootDistribution d = distribution_from_minors(p);
        j["distribution"] = distribution_json(d);
        text << "\n" << distribution_text(d);
    } else {
        j["distribution"] = nullptr;
        text << "\nquotient-sequence count not applicable (a minor vanishes)";
    }
    ctx.deliver(j, text.str());
    return 0;
}

int run_hankel(const AppContext& ctx, const ComplexPolynomial& cp) {
    auto [f0, f1] = imaginary_axis_split(cp);
    const RationalFunction r(f1, f0);
    json j;
    j["command"] = "hankel";
    j["f0"] = format_polynomial(f0);
    j["f1"] = format_polynomial(f1);
    std::ostringstream text;
    text << "f0: " << pretty(f0, "w") << "\nf1: " << pretty(f1, "w") << "\n";
    if (r.is_zero()) {
        j["proper"] = false;
        text << "f1/f0 is identically zero; no Hankel data";
        ctx.deliver(j, text.str());
        return 0;
    }
    const int n = r.den().degree();
    const MarkovSequence seq = markov_parameters(r, std::max(2 * n, 1));
    j["markov"] = rat_list(seq.s);
    text << "markov: " << join_rats(seq.s) << "\n";
    if (n > 0) {
        const auto minors = hankel_leading_minors(seq.s, n);
        const auto shifted = hankel_shifted_minors(seq.s, n);
        const HankelReport hr = hankel_rank_signature(seq.s, n);
        const bool proper = is_proper_via_hankel(r);
        j["leading_minors"] = rat_list(minors);
        j["shifted_minors"] = rat_list(shifted);
        j["rank"] = hr.rank;
        j["signature"] = hr.signature;
        j["proper"] = proper;
        text << "leading minors: " << join_rats(minors) << "\n"
             << "shifted minors: " << join_rats(shifted) << "\n"
             << "rank: " << hr.rank << "\nsignature: " << hr.signature << "\n"
             << "proper: " << (proper ? "yes" : "no");
    } else {
        j["proper"] = false;
        text << "reduced pair is constant; no Hankel data";
    }
    ctx.deliver(j, text.str());
    return 0;
}

int run_cf(const AppContext& ctx, const ComplexPolynomial& cp) {
    auto [f0, f1] = imaginary_axis_split(cp);
    const RationalFunction r(f1, f0);
    json j;
    j["command"] = "cf";
    std::ostringstream text;
    if (r.is_zero()) {
        j["quotients"] = json::array();
        j["index"] = 0;
        text << "quotients: (none)\nindex: 0";
        ctx.deliver(j, text.str());
        return 0;
    }
    const ContinuedFraction cf = cf_expand(r);
    json quotients = json::array();
    text << "quotients:";
    for (const Polynomial& d : cf.terms) {
        quotients.push_back(format_polynomial(d));
        text << " [" << pretty(d, "w") << "]";
    }
    const int index = index_from_cf(cf);
    j["quotients"] = quotients;
    j["index"] = index;
    j["proper"] = is_proper_via_cf(r);
    text << "\nindex: " << index << "\nproper: " << (is_proper_via_cf(r) ? "yes" : "no");
    ctx.deliver(j, text.str());
    return 0;
}

int run_crosscheck(const AppContext& ctx, const ComplexPolynomial& cp) {
    const CrossCheck check = cp.is_real() ? crosscheck(cp.as_real()) : crosscheck(cp);
    json j;
    j["command"] = "crosscheck";
    j["agree"] = check.agree;
    json results = json::array();
    std::ostringstream text;
    for (const MethodResult& res : check.results) {
        json r;
        r["method"] = to_string(res.method);
        r["applicable"] = res.applicable;
        if (!res.note.empty()) r["note"] = res.note;
        if (res.applicable) r["distribution"] = distribution_json(res.distribution);
        results.push_back(std::move(r));
        text << to_string(res.method) << ": ";
        if (res.applicable) {
            text << "(n-, n+, axis) = (" << res.distribution.n_minus << ", "
                 << res.distribution.n_plus << ", " << res.distribution.axis_count << ")";
            if (!res.note.empty()) text << "  [" << res.note << "]";
        } else {
            text << "not applicable: " << res.note;
        }
        text << "\n";
    }
    j["results"] = std::move(results);
    text << "agreement: " << (check.agree ? "yes" : "NO");
    ctx.deliver(j, text.str());
    return check.agree ? 0 : 1;
}

int run_hodograph(const AppContext& ctx, const ComplexPolynomial& cp, int points,
                  const std::string& out_path) {
    json j;
    j["command"] = "hodograph";
    std::ostringstream text;
    try {
        const WindingSummary winding = winding_increment(cp);
        j["delta_over_pi"] = winding.delta_over_pi;
        json idx = json::array();
        for (int i : winding.crossing_indices) idx.push_back(i);
        j["crossing_indices"] = std::move(idx);
        text << "delta/pi: " << winding.delta_over_pi << "\ncrossing indices:";
        for (int i : winding.crossing_indices) text << " " << (i > 0 ? "+1" : "-1");
    } catch (const AxisRootsPresent& e) {
        *ctx.err << "error: " << e.what()
                 << " (split-pair gcd: " << format_polynomial(e.axis_gcd) << ")\n";
        return 2;
    }
    const auto samples = sample_curve(cp, points);
    const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
    const std::string plot = emit(samples, svg ? PlotFormat::Svg : PlotFormat::Csv);
    if (out_path.empty()) {
        ctx.deliver(j, text.str());
        *ctx.out << plot;
    } else {
        std::ofstream file(out_path);
        if (!file) {
            *ctx.err << "error: cannot write " << out_path << "\n";
            return 2;
        }
        file << plot;
        j["written"] = out_path;
        j["samples"] = static_cast<int>(samples.size());
        text << "\nwrote " << samples.size() << " samples to " << out_path;
        ctx.deliver(j, text.str());
    }
    return 0;
}

int run_lorenz(const AppContext& ctx, const std::string& sigma, const std::string& r,
               const std::string& b) {
    const LorenzParams params{parse_rational(sigma), parse_rational(r), parse_rational(b)};
    const LorenzAnalysis analysis = lorenz_analyze(params);
    json j;
    j["command"] = "lorenz";
    j["sigma"] = to_string(params.sigma);
    j["r"] = to_string(params.r);
    j["b"] = to_string(params.b);
    j["fixed_points"] = analysis.fixed_point_count;
    j["wing_radicand"] = to_string(analysis.wing_radicand);
    j["origin"] = {
        {"linear_root", to_string(analysis.origin_linear_root)},
        {"quadratic", format_polynomial(analysis.origin_quadratic)},
        {"classification", to_string(analysis.origin_verdict.kind)},
        {"distribution", distribution_json(analysis.origin_verdict.distribution)},
    };
    std::ostringstream text;
    text << "fixed points: " << analysis.fixed_point_count;
    if (analysis.fixed_point_count == 3)
        text << "  (origin and a pair at X = Y = +-sqrt(" << to_string(analysis.wing_radicand)
             << "), Z = " << to_string(params.r - 1) << ")";
    text << "\norigin: factor root " << to_string(analysis.origin_linear_root)
         << ", quadratic " << pretty(analysis.origin_quadratic, "x") << " -> "
         << to_string(analysis.origin_verdict.kind);
    if (analysis.wing_poly) {
        j["wing"] = {
            {"polynomial", format_polynomial(*analysis.wing_poly)},
            {"classification", to_string(analysis.wing_verdict->kind)},
            {"distribution", distribution_json(analysis.wing_verdict->distribution)},
        };
        text << "\nnonzero pair: " << pretty(*analysis.wing_poly, "x") << " -> "
             << to_string(analysis.wing_verdict->kind);
    }
    if (analysis.r_star) {
        j["r_star"] = to_string(*analysis.r_star);
        text << "\nr*: " << to_string(*analysis.r_star);
    } else {
        j["r_star"] = "infinity";
        text << "\nr*: infinity (sigma <= b + 1)";
    }
    ctx.deliver(j, text.str());
    return 0;
}

// Runs `handler` once on `input`, or once per line of the batch file.
int run_lines(const AppContext& ctx, const std::string& input, const std::string& in_path,
              const std::function<int(const ComplexPolynomial&)>& handler) {
    if (in_path.empty()) return handler(parse_polynomial(input));
    std::ifstream file(in_path);
    if (!file) {
        *ctx.err << "error: cannot read " << in_path << "\n";
        return 2;
    }
    int worst = 0;
    for (std::string line; std::getline(file, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!ctx.json_output) *ctx.out << "## " << line << "\n";
        worst = std::max(worst, handler(parse_polynomial(line)));
    }
    return worst;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact root-distribution and stability analysis of polynomials"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    AppContext ctx{false, &out, &err};

    std::string input;
    std::string in_path;
    std::string method = "routh";
    std::string out_path;
    int points = 2000;
    std::string sigma, r_param, b_param;

    auto add_poly_arg = [&](CLI::App* cmd, bool batch) {
        cmd->add_option("polynomial", input,
                        "Coefficients, descending degree (e.g. \"1 2 3 1\", \"1/2 0 -3/4\", "
                        "complex \"1+2i\")");
        if (batch) cmd->add_option("--in", in_path, "File with one polynomial per line");
    };

    CLI::App* stability = app.add_subcommand("stability", "Routh stability verdict + h array");
    add_poly_arg(stability, true);
    CLI::App* distribution =
        app.add_subcommand("distribution", "Root counts relative to the imaginary axis");
    add_poly_arg(distribution, true);
    distribution->add_option("--method", method, "Computation route")
        ->check(CLI::IsMember({"routh", "hurwitz", "sturm", "hankel", "cf"}))
        ->capture_default_str();
    CLI::App* hurwitz =
        app.add_subcommand("hurwitz", "Hurwitz minors and the quotient-sequence count");
    add_poly_arg(hurwitz, false);
    CLI::App* hankel =
        app.add_subcommand("hankel", "Markov parameters and Hankel minors of the split pair");
    add_poly_arg(hankel, false);
    CLI::App* cf =
        app.add_subcommand("cf", "Stieltjes continued fraction of the split pair");
    add_poly_arg(cf, false);
    CLI::App* hodograph =
        app.add_subcommand("hodograph", "Exact winding plus curve samples (CSV/SVG)");
    add_poly_arg(hodograph, false);
    hodograph->add_option("--points", points, "Number of samples")->capture_default_str();
    hodograph->add_option("--out", out_path, "Output file (.svg for SVG, CSV otherwise)");
    CLI::App* crosscheck_cmd =
        app.add_subcommand("crosscheck", "Run all methods and compare their answers");
    add_poly_arg(crosscheck_cmd, true);
    CLI::App* lorenz = app.add_subcommand("lorenz", "Lorenz fixed-point stability analysis");
    lorenz->add_option("sigma", sigma, "sigma > 0")->required();
    lorenz->add_option("r", r_param, "r > 0")->required();
    lorenz->add_option("b", b_param, "b > 0")->required();

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    ctx.json_output = format == "json";

    try {
        if (stability->parsed())
            return run_lines(ctx, input, in_path,
                             [&](const ComplexPolynomial& p) { return run_stability(ctx, p); });
        if (distribution->parsed())
            return run_lines(ctx, input, in_path, [&](const ComplexPolynomial& p) {
                return run_distribution(ctx, p, method);
            });
        if (hurwitz->parsed()) return run_hurwitz(ctx, parse_polynomial(input));
        if (hankel->parsed()) return run_hankel(ctx, parse_polynomial(input));
        if (cf->parsed()) return run_cf(ctx, parse_polynomial(input));
        if (hodograph->parsed())
            return run_hodograph(ctx, parse_polynomial(input), points, out_path);
        if (crosscheck_cmd->parsed())
            return run_lines(ctx, input, in_path,
                             [&](const ComplexPolynomial& p) { return run_crosscheck(ctx, p); });
        if (lorenz->parsed()) return run_lorenz(ctx, sigma, r_param, b_param);
    } catch (const ParseError& e) {
        err << "error: " << e.what();
        if (e.token_index >= 0) err << " (token " << e.token_index + 1 << ")";
        err << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace polystab
