#include <doctest.h>

#include <cmath>
#include <vector>

#include "plap/analysis.hpp"
#include "plap/errors.hpp"

using namespace plap;

namespace {

InterfaceTrace synthetic_trace(int n, double coeff, double expo,
                               double t_min = 0.01, double t_max = 1.0,
                               double wiggle = 0.0) {
    InterfaceTrace tr;
    tr.threshold_abs = 1e-10;
    for (int i = 0; i < n; ++i) {
        const double t =
            t_min * std::pow(t_max / t_min, double(i) / (n - 1));
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        tr.samples.push_back(
            {t, coeff * std::pow(t, expo) * (1.0 + sign * wiggle), false, false});
    }
    return tr;
}

}  // namespace

TEST_CASE("power-law fit recovers a synthetic law exactly") {
    const InterfaceTrace tr = synthetic_trace(20, 2.0, 0.3);
    const PowerLawFit fit = fit_power_law(tr, 0.009, 1.1);
    CHECK(fit.exponent == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(fit.coefficient == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.local_slopes.size() == 19);
}

TEST_CASE("power-law fit is robust to small perturbations") {
    const InterfaceTrace tr = synthetic_trace(20, 2.0, 0.3, 0.01, 1.0, 0.005);
    const PowerLawFit fit = fit_power_law(tr, 0.009, 1.1);
    CHECK(fit.exponent == doctest::Approx(0.3).epsilon(0.02));
    CHECK(fit.coefficient == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("degenerate fits throw") {
    // sign change in the window
    InterfaceTrace tr = synthetic_trace(20, 2.0, 0.3);
    tr.samples[10].eta = -tr.samples[10].eta;
    CHECK_THROWS_AS(fit_power_law(tr, 0.009, 1.1), DegenerateFit);
    // fewer than 8 samples
    const InterfaceTrace small = synthetic_trace(6, 2.0, 0.3);
    CHECK_THROWS_AS(fit_power_law(small, 0.009, 1.1), DegenerateFit);
}

TEST_CASE("compensated coefficient with a known exponent") {
    const InterfaceTrace tr = synthetic_trace(20, -1.7, 0.25);
    CHECK(compensated_coefficient(tr, 0.009, 1.1, 0.25) ==
          doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("tail asymptote on a synthetic algebraic tail") {
    Grid1D grid{-1.0, 100.0, 2048};
    SolutionField s = custom_data(grid, [](double x) {
        return x > 0.5 ? 7.0 * std::pow(x, -3.0) : 7.0 * std::pow(0.5, -3.0);
    });
    s.t = 1.0;
    const TailFit fit = tail_asymptote(s, 2.0, 50.0);
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(fit.coefficient == doctest::Approx(7.0).epsilon(1e-8));
    const TailFit comp = tail_asymptote(s, 2.0, 50.0, true, -3.0);
    CHECK(comp.coefficient == doctest::Approx(7.0).epsilon(1e-10));
}

TEST_CASE("noisy windows are rejected") {
    Grid1D grid{-1.0, 100.0, 2048};
    SolutionField s = custom_data(grid, [](double x) {
        return 1.0 + 0.9 * std::sin(7.0 * x); // no power law at all
    });
    s.t = 1.0;
    CHECK_THROWS_AS(tail_asymptote(s, 2.0, 50.0), WindowTooNoisy);
}

TEST_CASE("sandwich check flags genuine violations") {
    Grid1D grid{-1.0, 1.0, 128};
    SolutionField s = custom_data(grid, [](double) { return 1.0; });
    s.t = 1.0;
    const std::vector<SolutionField> snaps{s};
    auto always = [](double, double) { return true; };
    // lower = 2 > u = 1 everywhere: every lower check must fail
    SandwichReport bad = check_sandwich(
        snaps, [](double, double) { return 2.0; }, always,
        [](double, double) { return 3.0; }, always, 1e-3);
    CHECK(bad.lower_violations == bad.lower_checked);
    CHECK(bad.lower_checked > 0);
    CHECK(bad.upper_violations == 0);
    // consistent bounds: no violations
    SandwichReport good = check_sandwich(
        snaps, [](double, double) { return 0.5; }, always,
        [](double, double) { return 3.0; }, always, 1e-3);
    CHECK(good.lower_violations == 0);
    CHECK(good.upper_violations == 0);
}

TEST_CASE("default edge power per region") {
    // regions I/II: (p-1-beta)/p
    CHECK(default_edge_power(Params{1.5, 1, 0.25, 2, 1}) ==
          doctest::Approx(0.25 / 1.5).epsilon(1e-14));
    // region III: 1-beta
    CHECK(default_edge_power(Params{1.8, 1, 0.5, 8, 1}) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // region V: raw u
    CHECK(default_edge_power(Params{1.5, 1, 0.8, 2, 1}) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("richardson estimate") {
    CHECK(richardson_estimate(1.0, 1.1) == doctest::Approx(0.1).epsilon(1e-12));
}
