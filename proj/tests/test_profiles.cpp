#include <doctest.h>

#include <cmath>

#include "plap/constants.hpp"
#include "plap/errors.hpp"
#include "plap/profiles.hpp"

using namespace plap;

namespace {

SolverOptions profile_opts() {
    SolverOptions opts;
    opts.eps_reg = 1e-12;
    opts.dt_init = 1e-8;
    opts.dt_rel = 0.02;
    opts.picard_relative = true;
    return opts;
}

}  // namespace

TEST_CASE("f0 extraction: amplitude, monotonicity, rescaling") {
    const Grid1D grid{-8.0, 16.0, 1024};
    const SolverOptions opts = profile_opts();
    const F0Result f0 = extract_f0(1.5, 2.0, 1.0, grid, opts);

    CHECK(f0.A0_unit > 0.0);
    CHECK(f0.A0 == doctest::Approx(f0.A0_unit).epsilon(1e-14)); // C = 1
    // Reference amplitude from a fine-grid run; 2% covers this resolution.
    CHECK(f0.A0 == doctest::Approx(0.5742).epsilon(0.02));
    for (std::size_t i = 1; i < f0.table.values.size(); ++i)
        CHECK(f0.table.values[i] <= f0.table.values[i - 1] + 1e-14);

    // (C2') rescaling to C = 2 must agree with a direct solve from the
    // C = 2 power data (the scaling symmetry is exact at t = 1).
    Params pr2{1.5, 0, 1.0, 2.0, 2.0};
    SolverOptions o2 = opts;
    o2.right_bc = RightBc::tail_asymptotic;
    const SolutionField u2 = solve(pr2, grid, o2, 1.0, {1.0}).back();
    const auto xs = grid.centers();
    for (const double rho : {0.5, 2.0, 5.0}) {
        const double scaled = rescale_f0(f0, 2.0, 1.5, 2.0, rho);
        double direct = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (xs[i] >= rho) {
                const double w = (rho - xs[i - 1]) / (xs[i] - xs[i - 1]);
                direct = (1 - w) * u2.u[i - 1] + w * u2.u[i];
                break;
            }
        }
        CHECK(scaled == doctest::Approx(direct).epsilon(0.02));
    }
}

TEST_CASE("f1 extraction reports the support edge and throws near the wall") {
    Params pr{1.5, 1, 0.25, 6, 1};
    pr.C = 2.0 * critical_amplitude(pr);

    SUBCASE("expanding amplitude yields zeta* > 0 and A1") {
        const Grid1D grid{-3.0, 3.0, 1024};
        const F1Result f1 = extract_f1(pr, grid, profile_opts());
        CHECK(f1.profile.zeta_star > 0.0);
        REQUIRE(f1.profile.A1.has_value());
        CHECK(*f1.profile.A1 > 0.0);
    }
    SUBCASE("support edge too close to the right wall") {
        // The expanding front sits near zeta ~ 0.39 at t = 1; a wall at 0.2
        // puts the edge inside the 5-cell guard band.
        const Grid1D grid{-4.0, 0.2, 512};
        CHECK_THROWS_AS(extract_f1(pr, grid, profile_opts()),
                        SupportEdgeOutOfDomain);
    }
}

TEST_CASE("b = 0 profile is self-similar under the time rescaling") {
    const Grid1D grid{-8.0, 16.0, 1024};
    SolverOptions opts = profile_opts();
    const F0Result f0 = extract_f0(1.5, 2.0, 1.0, grid, opts);
    const Params pr{1.5, 0, 1.0, 2.0, 1.0};
    // infinite-speed regime: the probe run needs the algebraic-tail right BC.
    // Trim the table to xi <= 8 and probe on a wider domain: near either
    // wall the Dirichlet asymptote leads the profile (the tail has not
    // converged to the pure power law there), and the comparison is confined
    // to the table's coordinate range, so both runs are compared only well
    // inside their domains.
    opts.right_bc = RightBc::tail_asymptotic;
    ProfileTable inner = f0.table;
    while (!inner.points.empty() && inner.points.back() > 8.0) {
        inner.points.pop_back();
        inner.values.pop_back();
    }
    const Grid1D probe_grid{-8.0, 40.0, 2048};
    const double dev = self_similar_consistency(pr, inner, 2.0, probe_grid, opts);
    CHECK(dev < 0.05);
}

TEST_CASE("support edge sub-cell interpolation") {
    Grid1D grid{-1.0, 1.0, 200}; // dx = 0.01
    SolutionField s = custom_data(
        grid, [](double x) { return x < 0.234 ? 0.234 - x : 0.0; });
    // linear contact: edge_power 1 recovers the zero to sub-cell accuracy
    const double edge = support_edge(s, 1e-12, 1.0);
    CHECK(edge == doctest::Approx(0.234).epsilon(1e-3));

    SolutionField flat = custom_data(grid, [](double) { return 1.0; });
    CHECK(std::isnan(support_edge(flat, 1e-12, 1.0)));
    SolutionField zero = custom_data(grid, [](double) { return 0.0; });
    CHECK(std::isinf(support_edge(zero, 1e-12, 1.0)));
}
