#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "polystab/routh.hpp"
#include "polystab/sturm.hpp"

using namespace polystab;
using namespace polystab::testing;

TEST_CASE("array examples") {
    {
        const RouthOutcome out = routh_array(Polynomial{1, 2, 3, 1});
        CHECK(out.completed);
        const std::vector<Rat> expect{Rat(1), Rat(2), Rat(5, 2), Rat(1)};
        CHECK(out.h == expect);
    }
    {
        const RouthOutcome out = routh_array(Polynomial{1, 1, 1, 1});
        CHECK(out.completed);
        const std::vector<Rat> expect{Rat(1), Rat(1), Rat(0), Rat(1)};
        CHECK(out.h == expect);
    }
    {
        // Degree 2 and the even-degree gap a_1 = 0: the loop body never runs,
        // so the array is the input and the degenerate tail rules apply.
        const RouthOutcome out = routh_array(Polynomial{1, 0, 1});
        CHECK(out.completed);
        const std::vector<Rat> expect{Rat(1), Rat(0), Rat(1)};
        CHECK(out.h == expect);
    }
    CHECK_THROWS_AS(routh_array(Polynomial::constant(2)), std::domain_error);
}

TEST_CASE("array of the degree-6 front-page polynomial") {
    const RouthOutcome out = routh_array(Polynomial{32, 12, 46, 21, 16, 7, 1});
    CHECK(out.completed);
    const std::vector<Rat> expect{Rat(32),       Rat(12),         Rat(-10), Rat(89, 5),
                                  Rat(518, 267), Rat(-505, 518),  Rat(1)};
    CHECK(out.h == expect);
}

TEST_CASE("classification examples") {
    {
        const StabilityClass c = classify(Polynomial{1, 2, 3, 1});
        CHECK(c.kind == StabilityKind::Stable);
        CHECK(c.distribution.n_minus == 3);
        CHECK(c.distribution.n_plus == 0);
    }
    {
        const StabilityClass c = classify(Polynomial{1, 1, 1, 1});
        CHECK(c.kind == StabilityKind::ConjugatePairOnAxis);
        CHECK(c.distribution.n_minus == 1);
        CHECK(c.distribution.n_plus == 0);
        CHECK(c.distribution.axis_count == 2);
        CHECK(*c.distribution.pair_omega_squared == 1);
    }
    {
        const StabilityClass c = classify(Polynomial{1, 1, 0});
        CHECK(c.kind == StabilityKind::SimpleZeroRoot);
        CHECK(c.distribution.n_minus == 1);
        CHECK(c.distribution.n_plus == 0);
        CHECK(c.distribution.axis_count == 1);
    }
    {
        // z^3 + z^2 = z^2 (z + 1): double root at 0.
        const StabilityClass c = classify(Polynomial{1, 1, 0, 0});
        CHECK(c.kind == StabilityKind::DoubleZeroRoot);
        CHECK(c.distribution.n_minus == 1);
        CHECK(c.distribution.n_plus == 0);
        CHECK(c.distribution.axis_count == 2);
    }
    {
        // (z^2+1)(z^2+4): two axis pairs stall the array; Sturm fallback.
        const StabilityClass c = classify(Polynomial{1, 0, 5, 0, 4});
        CHECK(c.kind == StabilityKind::Inconclusive);
        CHECK(c.distribution.n_minus == 0);
        CHECK(c.distribution.n_plus == 0);
        CHECK(c.distribution.axis_count == 4);
    }
    {
        const StabilityClass c = classify(Polynomial{32, 12, 46, 21, 16, 7, 1});
        CHECK(c.kind == StabilityKind::UnstableOffAxis);
        CHECK(c.distribution.n_minus == 2);
        CHECK(c.distribution.n_plus == 4);
    }
}

TEST_CASE("stability examples") {
    CHECK(is_stable(Polynomial{1, 1, 1}));
    CHECK_FALSE(is_stable(Polynomial{1, 1, 1, 2}));
    CHECK(is_stable(Polynomial{1, 1}));
    CHECK_FALSE(is_stable(Polynomial{1, 0, 1}));
    // Quadratics with positive coefficients are stable.
    Rng rng(11);
    for (int i = 0; i < 50; ++i)
        CHECK(is_stable(Polynomial{random_positive_rat(rng), random_positive_rat(rng),
                                   random_positive_rat(rng)}));
}

TEST_CASE("negative leading coefficient is normalized") {
    const RouthOutcome out = routh_array(Polynomial{-1, -2, -3, -1});
    CHECK(out.negated);
    const std::vector<Rat> expect{Rat(1), Rat(2), Rat(5, 2), Rat(1)};
    CHECK(out.h == expect);
    CHECK(is_stable(Polynomial{-1, -2, -3, -1}));
}

TEST_CASE("classification agrees with the Sturm split on random polynomials") {
    Rng rng(314159);
    for (int i = 0; i < 400; ++i) {
        const FactoredReal fr = random_factored_real(rng, 8, true);
        const StabilityClass c = classify(fr.p);
        const HalfPlaneSplit s = half_plane_split(fr.p);
        CHECK(c.distribution.n_minus == s.n_minus);
        CHECK(c.distribution.n_plus == s.n_plus);
        CHECK(c.distribution.axis_count == s.axis_count);
    }
}

TEST_CASE("stability implies positive coefficients") {
    Rng rng(2718);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = random_poly(rng, uniform_int(rng, 1, 8));
        if (p.leading() < 0) p = -p;
        if (!is_stable(p)) continue;
        for (const Rat& a : p.coefficients()) CHECK(a > 0);
    }
    // And on guaranteed-stable products.
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = random_stable_poly(rng, 8);
        CHECK(is_stable(p));
        for (const Rat& a : p.coefficients()) CHECK(a > 0);
    }
}

TEST_CASE("scale invariance") {
    Rng rng(1414);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = random_poly(rng, uniform_int(rng, 1, 8));
        const Rat c = random_positive_rat(rng);
        CHECK(is_stable(p) == is_stable(c * p));
    }
}

TEST_CASE("axis pair frequency is recovered from the array tail") {
    Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        const Rat w = random_positive_rat(rng);
        const Polynomial q = random_stable_poly(rng, 5);
        const Polynomial p = Polynomial{Rat(1), Rat(0), w * w} * q;
        const StabilityClass c = classify(p);
        REQUIRE(c.kind == StabilityKind::ConjugatePairOnAxis);
        CHECK(*c.distribution.pair_omega_squared == w * w);
        CHECK(c.distribution.n_minus == q.degree());
        CHECK(c.distribution.n_plus == 0);
    }
}
