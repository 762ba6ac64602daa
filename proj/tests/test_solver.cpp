#include <doctest.h>

#include <cmath>
#include <numeric>

#include "plap/closed_forms.hpp"
#include "plap/errors.hpp"
#include "plap/solver.hpp"

using namespace plap;

namespace {

double mass(const SolutionField& s) {
    return std::accumulate(s.u.begin(), s.u.end(), 0.0) * s.grid.dx();
}

}  // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS((Grid1D{0.5, 2.0, 128}.check()), RangeError); // origin outside
    CHECK_THROWS_AS((Grid1D{-1.0, 1.0, 32}.check()), RangeError); // too few cells
    CHECK_NOTHROW((Grid1D{-1.0, 1.0, 64}.check()));
}

TEST_CASE("constant data is preserved by diffusion") {
    const Params pr{1.5, 0, 1.0, 1, 1}; // b = 0
    Grid1D grid{-2.0, 2.0, 128};
    SolverOptions opts;
    opts.dt_init = 1e-6;
    opts.left_bc_fn = [](double) { return 1.0; };
    opts.right_bc_fn = [](double) { return 1.0; };
    const SolutionField init = custom_data(grid, [](double) { return 1.0; });
    const auto snaps = solve_from(init, pr, opts, 0.01, {0.01});
    for (const double u : snaps.back().u)
        CHECK(u == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pure-reaction hook reproduces the exact absorption flow") {
    const Params pr{1.5, 1, 0.25, 2, 1};
    Grid1D grid{-2.0, 2.0, 128};
    SolverOptions opts;
    opts.diffusion_off = true;
    opts.dt_init = 1e-6;
    const auto snaps = solve(pr, grid, opts, 0.5, {0.5});
    for (int i = 0; i < grid.n_cells; ++i) {
        const double exact = reaction_only_ubar(grid.x_center(i), 0.5, pr);
        CHECK(snaps.back().u[i] == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("comparison principle: ordered data stays ordered") {
    const Params pr{1.5, 1, 0.5, 2, 1};
    Grid1D grid{-3.0, 3.0, 256};
    SolverOptions opts;
    opts.dt_init = 1e-7;
    opts.left_bc_fn = [](double) { return 0.0; };
    auto bump = [](double amp) {
        return [amp](double x) { return amp * std::max(0.0, 1.0 - x * x); };
    };
    const auto lo = solve_from(custom_data(grid, bump(0.5)), pr, opts, 0.1, {0.05, 0.1});
    const auto hi = solve_from(custom_data(grid, bump(1.0)), pr, opts, 0.1, {0.05, 0.1});
    for (std::size_t k = 0; k < lo.size(); ++k)
        for (int i = 0; i < grid.n_cells; ++i)
            CHECK(lo[k].u[i] <= hi[k].u[i] + 1e-8);
}

TEST_CASE("mass is non-increasing with absorption and zero-flux right wall") {
    const Params pr{1.5, 1, 0.5, 2, 1};
    Grid1D grid{-3.0, 3.0, 256};
    SolverOptions opts;
    opts.dt_init = 1e-7;
    opts.right_bc = RightBc::neumann_zero;
    opts.left_bc_fn = [](double) { return 0.0; };
    const SolutionField init = custom_data(
        grid, [](double x) { return std::max(0.0, 1.0 - x * x); });
    const auto snaps = solve_from(init, pr, opts, 0.2, {0.05, 0.1, 0.2});
    double prev = mass(init);
    for (const auto& s : snaps) {
        CHECK(mass(s) <= prev * (1 + 1e-12));
        prev = mass(s);
    }
}

TEST_CASE("solutions stay nonnegative") {
    const Params pr{1.5, 1, 0.25, 2, 1};
    Grid1D grid{-4.0, 4.0, 256};
    SolverOptions opts;
    opts.dt_init = 1e-8;
    const auto snaps = solve(pr, grid, opts, 0.05, {0.01, 0.05});
    for (const auto& s : snaps)
        for (const double u : s.u) CHECK(u >= 0.0);
}

TEST_CASE("Picard divergence is reported") {
    const Params pr{1.5, 1, 0.25, 2, 1};
    Grid1D grid{-2.0, 2.0, 128};
    SolverOptions opts;
    opts.picard_max = 1;
    opts.picard_tol = 0.0; // unattainable
    const SolutionField init = initial_data(grid, pr);
    CHECK_THROWS_AS(step(init, 1e-4, pr, opts), PicardDivergence);
}

TEST_CASE("snapshots interpolated in time are flagged") {
    const Params pr{1.5, 1, 0.25, 2, 1};
    Grid1D grid{-2.0, 2.0, 128};
    SolverOptions opts;
    opts.dt_init = 1e-6;
    const auto snaps = solve(pr, grid, opts, 0.02, {0.013});
    REQUIRE(snaps.size() == 1);
    CHECK(snaps[0].t == doctest::Approx(0.013).epsilon(1e-12));
    CHECK(snaps[0].interpolated);
}
