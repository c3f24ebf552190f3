#pragma once

#include "polystab/polynomial.hpp"
#include "polystab/routh.hpp"
#include "polystab/sturm.hpp"

#include <string>
#include <vector>

namespace polystab {

/// The five interchangeable routes to the root distribution.
enum class Method { Routh, Hurwitz, Sturm, Hankel, Cf };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

/// Distribution of p by the chosen method. The Sturm, Hankel and
/// continued-fraction routes share the axis accounting and differ in how the
/// Cauchy index of the reduced split pair is computed; the Routh route uses
/// the array classification (with its documented Sturm fallback); the
/// Hurwitz route requires all minors nonzero and throws otherwise. The Routh
/// and Hurwitz routes require real coefficients.
RootDistribution distribution_via(const Polynomial& p, Method m);
RootDistribution distribution_via(const ComplexPolynomial& p, Method m);

struct MethodResult {
    Method method = Method::Sturm;
    bool applicable = true;
    std::string note;  // reason when not applicable, or fallback remark
    RootDistribution distribution;
};

struct CrossCheck {
    std::vector<MethodResult> results;
    bool agree = true;  // all applicable methods report the same counts
};

/// Runs every applicable method and compares the answers.
CrossCheck crosscheck(const Polynomial& p);
CrossCheck crosscheck(const ComplexPolynomial& p);

}  // namespace polystab
