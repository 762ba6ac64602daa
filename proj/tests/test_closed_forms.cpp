#include <doctest.h>

#include <cmath>

#include "plap/closed_forms.hpp"
#include "plap/constants.hpp"
#include "plap/errors.hpp"

using namespace plap;

TEST_CASE("reaction-only exact solutions") {
    SUBCASE("beta < 1: finite-time extinction") {
        const Params pr{1.5, 1, 0.5, 2, 1};
        // u0 = 1: u = (1 - 0.5 t)^2 until extinction at t = 2
        CHECK(reaction_exact_solution(1.0, 1.0, pr) ==
              doctest::Approx(0.25).epsilon(1e-14));
        CHECK(reaction_exact_solution(1.0, 3.0, pr) == 0.0);
    }
    SUBCASE("beta = 1: exponential decay") {
        const Params pr{1.5, 2, 1.0, 2, 1};
        CHECK(reaction_exact_solution(3.0, 0.5, pr) ==
              doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-14));
    }
    SUBCASE("ubar uses the power data") {
        const Params pr{1.5, 1, 0.5, 2, 1};
        // x = -2: u0 = 4, u = (2 - 0.5 t)^2
        CHECK(reaction_only_ubar(-2.0, 1.0, pr) ==
              doctest::Approx(2.25).epsilon(1e-14));
        CHECK(reaction_only_ubar(1.0, 0.5, pr) == 0.0); // x > 0
    }
}

TEST_CASE("factored and direct similarity residuals agree") {
    const Params pr{1.5, 1, 0.25, 6, 1};
    const double cs = critical_amplitude(pr);
    for (const double C0 : {0.5 * cs, cs, 2.0 * cs}) {
        for (const double zeta : {-1.5, -0.3, 0.2, 0.9}) {
            const double direct = residual_similarity_zeta(C0, 1.0, zeta, pr);
            const double factored =
                residual_similarity_zeta_factored(C0, 1.0, zeta, pr);
            const double scale = std::max({std::fabs(direct),
                                           std::fabs(factored), 1e-300});
            // 1e-9 rather than machine-level: near the residual's zero the
            // direct four-term form loses digits to cancellation.
            CHECK(std::fabs(direct - factored) / scale < 1e-9);
        }
    }
}

TEST_CASE("similarity residual vanishes for the stationary amplitude") {
    // C0 = C*, zeta0 = 0 makes f1 the stationary solution: L0 f1 = 0.
    const Params pr{1.5, 1, 0.25, 6, 1};
    const double cs = critical_amplitude(pr);
    for (const double zeta : {-2.0, -1.0, -0.1}) {
        const double r = residual_similarity_zeta(cs, 0.0, zeta, pr);
        const double scale = powl_pos(-zeta, pr.p / (pr.p - 1 - pr.beta));
        CHECK(std::fabs(r) <= 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("R(xi) sign decides the b=0 tail barriers") {
    const Params pr{1.5, 0, 1.0, 1, 1};
    const double D = fast_diffusion_constant(pr.p);
    // (C7, xi4): supersolution factor >= 0;  (D, xi3): subsolution factor <= 0
    const double C7 = 48.0, xi4 = 4.57885697021333, xi3 = 1.81712059283214;
    for (int i = 0; i <= 50; ++i) {
        const double xi = 100.0 * i / 50.0;
        CHECK(R_xi(C7, xi4, xi, pr) >= -1e-12);
        CHECK(R_xi(D, xi3, xi, pr) <= 1e-12);
    }
}

TEST_CASE("g_mu is an exact b=0 solution") {
    const Params pr{1.5, 0, 1.0, 1, 1};
    const BarrierSpec spec = make_barrier(BarrierId::B0_upper_gmu, pr);
    for (const double x : {0.0, 0.5, 2.0, 10.0})
        for (const double t : {0.1, 1.0, 4.0})
            CHECK(std::fabs(residual_L(spec, x, t)) <=
                  1e-10 * std::max(1.0, barrier_value(spec, x, t)));
}

TEST_CASE("stationary solution has zero residual") {
    const Params pr{1.5, 1, 0.25, 6, 1};
    const BarrierSpec spec = make_barrier(BarrierId::Stationary_Cstar, pr);
    for (const double x : {0.01, 0.5, 3.0, 10.0}) {
        const double scale =
            std::max(1e-30, pr.b * powl_pos(barrier_value(spec, x, 1.0), pr.beta));
        CHECK(std::fabs(residual_L(spec, x, 1.0)) <= 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("analytic residual matches a finite-difference residual") {
    // Cross-check residual_L on the region-I lower barrier against centered
    // finite differences of barrier_value.
    const Params pr{1.5, 1, 0.25, 2, 1};
    const BarrierSpec spec = make_barrier(BarrierId::ThmI_lower, pr);
    const double x = 0.4, t = 0.7, h = 1e-5;
    auto g = [&](double xx, double tt) { return barrier_value(spec, xx, tt); };
    const double gt = (g(x, t + h) - g(x, t - h)) / (2 * h);
    auto flux = [&](double xx) {
        const double gx = (g(xx + h, t) - g(xx - h, t)) / (2 * h);
        return std::pow(std::fabs(gx), pr.p - 2.0) * gx;
    };
    const double fluxx = (flux(x + h) - flux(x - h)) / (2 * h);
    const double fd = gt - fluxx + pr.b * std::pow(g(x, t), pr.beta);
    const double an = residual_L(spec, x, t);
    CHECK(fd == doctest::Approx(an).epsilon(1e-4));
}

TEST_CASE("residual throws on the free boundary") {
    const Params pr{1.5, 1, 0.25, 2, 1};
    const BarrierSpec spec = make_barrier(BarrierId::ThmI_lower, pr);
    const double zeta1 = spec.constants.at("zeta0");
    CHECK_THROWS_AS(residual_L(spec, zeta1 * (1.0 + 1e-14), 1.0), OnFreeBoundary);
}

TEST_CASE("Lemma 3.3 barrier is a subsolution on its stated strip") {
    Params pr{1.5, 1, 0.25, 6, 1};
    pr.C = 2.0 * critical_amplitude(pr);
    const BarrierSpec spec = make_barrier(BarrierId::Lemma33_g, pr);
    const double w_max = spec.constants.at("w_max");
    REQUIRE(w_max > 0.0);
    for (int i = 1; i < 20; ++i) {
        const double w = w_max * i / 20.0; // w = -x + t in (0, w_max)
        CHECK(residual_L(spec, -w + 0.5, 0.5) <= 1e-14);
    }
}

TEST_CASE("b<0 tail barrier is a supersolution in the tail") {
    // The (1-eps) slack in the barrier dominates the negative reaction only
    // once g is small, i.e. for x beyond a t-dependent onset (x ~ 7 at t=1).
    const Params pr{1.5, -1, 1.5, 1, 1};
    const BarrierSpec spec = make_barrier(BarrierId::ThmV_bneg_tail, pr);
    for (const double x : {10.0, 20.0, 50.0})
        for (const double t : {0.1, 1.0})
            CHECK(residual_L(spec, x, t) >= -1e-14);
}

TEST_CASE("source-type solution solves the b=0 equation") {
    const double p = 1.5, C_B = 1.0, h = 1e-5;
    const double x = 0.5, t = 0.2;
    auto u = [&](double xx, double tt) {
        return source_type_solution(xx, tt, p, C_B);
    };
    const double ut = (u(x, t + h) - u(x, t - h)) / (2 * h);
    auto flux = [&](double xx) {
        const double ux = (u(xx + h, t) - u(xx - h, t)) / (2 * h);
        return std::pow(std::fabs(ux), p - 2.0) * ux;
    };
    const double fluxx = (flux(x + h) - flux(x - h)) / (2 * h);
    CHECK(ut == doctest::Approx(fluxx).epsilon(1e-4));
}

TEST_CASE("fast diffusion upper bound closed form") {
    const Params pr{1.5, 0, 1.0, 1, 1};
    // D = 3, exponent 1/(2-p) = 2, p/(p-2) = -3
    CHECK(fast_diffusion_upper(2.0, 1.0, pr) ==
          doctest::Approx(3.0 / 8.0).epsilon(1e-13));
    CHECK(fast_diffusion_upper(1.0, 2.0, pr) ==
          doctest::Approx(12.0).epsilon(1e-13));
}
