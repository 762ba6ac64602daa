#include <benchmark/benchmark.h>

#include "plap/constants.hpp"
#include "plap/phi.hpp"
#include "plap/regimes.hpp"
#include "plap/solver.hpp"

namespace {

void BM_classify(benchmark::State& state) {
    const plap::Params pr{1.5, 1, 0.25, 6, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(plap::classify(pr));
}
BENCHMARK(BM_classify);

void BM_constants_ledger(benchmark::State& state) {
    const plap::Params pr{1.5, 1, 0.25, 2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(plap::build_ledger(pr));
}
BENCHMARK(BM_constants_ledger);

void BM_phi_profile(benchmark::State& state) {
    const plap::Params pr{1.5, 1, 0.5, 2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(plap::phi_profile(pr, 10.0, 501));
}
BENCHMARK(BM_phi_profile);

void BM_solver_step(benchmark::State& state) {
    const plap::Params pr{1.5, 1, 0.25, 2, 1};
    const plap::Grid1D grid{-4.0, 4.0, static_cast<int>(state.range(0))};
    plap::SolverOptions opts;
    opts.eps_reg = 1e-12;
    // Step size shrinks with the mesh so the Picard iteration stays in its
    // contraction regime at every resolution.
    const double dt = 1e-5 * (1024.0 / grid.n_cells) * (1024.0 / grid.n_cells);
    plap::SolutionField s = plap::initial_data(grid, pr);
    s = plap::step(s, 0.1 * dt, pr, opts); // warm start off the cone data
    for (auto _ : state)
        benchmark::DoNotOptimize(plap::step(s, dt, pr, opts));
    state.SetItemsProcessed(state.iterations() * grid.n_cells);
}
BENCHMARK(BM_solver_step)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
