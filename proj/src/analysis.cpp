#include "polystab/analysis.hpp"

#include "polystab/hankel.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/stieltjes.hpp"

#include <stdexcept>
#include <type_traits>

namespace polystab {

std::string to_string(Method m) {
    switch (m) {
        case Method::Routh: return "routh";
        case Method::Hurwitz: return "hurwitz";
        case Method::Sturm: return "sturm";
        case Method::Hankel: return "hankel";
        case Method::Cf: return "cf";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "routh") return Method::Routh;
    if (name == "hurwitz") return Method::Hurwitz;
    if (name == "sturm") return Method::Sturm;
    if (name == "hankel") return Method::Hankel;
    if (name == "cf") return Method::Cf;
    throw std::domain_error("unknown method: " + name);
}

namespace {

int index_via_hankel(const RationalFunction& r) {
    if (r.is_zero()) return 0;
    const int n = r.den().degree();
    const MarkovSequence seq = markov_parameters(r, 2 * n - 1);
    return hankel_rank_signature(seq.s, n).signature;
}

int index_via_cf(const RationalFunction& r) {
    if (r.is_zero()) return 0;
    return index_from_cf(cf_expand(r));
}

RootDistribution from_half_plane(const HalfPlaneSplit& split) {
    RootDistribution d;
    d.n_minus = split.n_minus;
    d.n_plus = split.n_plus;
    d.axis_count = split.axis_count;
    d.axis_kind = split.axis_count == 0 ? AxisKind::None : AxisKind::FromGcd;
    if (split.axis_count != 0) d.axis_gcd = split.imaginary_axis_gcd;
    return d;
}

}  // namespace

RootDistribution distribution_via(const ComplexPolynomial& p, Method m) {
    switch (m) {
        case Method::Sturm:
            return from_half_plane(half_plane_split(p));
        case Method::Hankel:
            return from_half_plane(half_plane_split_with(p, index_via_hankel));
        case Method::Cf:
            return from_half_plane(half_plane_split_with(p, index_via_cf));
        case Method::Routh:
        case Method::Hurwitz:
            if (!p.is_real())
                throw std::domain_error(to_string(m) +
                                        " requires a polynomial with real coefficients");
            return distribution_via(p.as_real(), m);
    }
    throw std::logic_error("unreachable");
}

RootDistribution distribution_via(const Polynomial& p, Method m) {
    switch (m) {
        case Method::Routh:
            return classify(p).distribution;
        case Method::Hurwitz:
            return distribution_from_minors(p);
        default:
            return distribution_via(ComplexPolynomial(p), m);
    }
}

namespace {

bool same_counts(const RootDistribution& a, const RootDistribution& b) {
    return a.n_minus == b.n_minus && a.n_plus == b.n_plus && a.axis_count == b.axis_count;
}

template <typename Poly>
CrossCheck crosscheck_impl(const Poly& p, const std::vector<Method>& methods) {
    CrossCheck out;
    for (Method m : methods) {
        MethodResult res;
        res.method = m;
        try {
            res.distribution = distribution_via(p, m);
            if constexpr (std::is_same_v<Poly, Polynomial>) {
                if (m == Method::Routh && !routh_array(p).completed)
                    res.note = "array incomplete; answered by the Sturm fallback";
            }
        } catch (const std::domain_error& e) {
            res.applicable = false;
            res.note = e.what();
        }
        out.results.push_back(std::move(res));
    }
    const MethodResult* first = nullptr;
    for (const MethodResult& res : out.results) {
        if (!res.applicable) continue;
        if (!first)
            first = &res;
        else if (!same_counts(first->distribution, res.distribution))
            out.agree = false;
    }
    return out;
}

}  // namespace

CrossCheck crosscheck(const Polynomial& p) {
    return crosscheck_impl(
        p, {Method::Sturm, Method::Routh, Method::Hurwitz, Method::Hankel, Method::Cf});
}

CrossCheck crosscheck(const ComplexPolynomial& p) {
    if (p.is_real()) return crosscheck(p.as_real());
    return crosscheck_impl(p, {Method::Sturm, Method::Hankel, Method::Cf});
}

}  // namespace polystab
