#include "plap/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "plap/closed_forms.hpp"
#include "plap/constants.hpp"
#include "plap/errors.hpp"

namespace plap {

namespace {

// Thomas solve of the tridiagonal system (lo, di, up) v = rhs, in place.
void thomas(std::vector<double>& lo, std::vector<double>& di,
            std::vector<double>& up, std::vector<double>& rhs,
            std::vector<double>& out) {
    const std::size_t n = di.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = lo[i] / di[i - 1];
        di[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    out.resize(n);
    out[n - 1] = rhs[n - 1] / di[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        out[i] = (rhs[i] - up[i] * out[i + 1]) / di[i];
}

// Regularized diffusion coefficient (g^2 + eps^2)^{(p-2)/2}.
inline double coef(double g, double eps, double p) {
    return std::pow(g * g + eps * eps, 0.5 * (p - 2.0));
}

double left_bc_value(const SolutionField& init_ref, const Params& params,
                     const SolverOptions& opts, double t) {
    if (opts.left_bc_fn) return opts.left_bc_fn(t);
    const double u0 = params.C * powl_pos(-init_ref.grid.x_lo, params.alpha);
    if (opts.left_bc == LeftBc::reaction_decay && params.b != 0.0)
        return reaction_exact_solution(u0, t, params);
    return u0;
}

double right_bc_value(const SolutionField& init_ref, const Params& params,
                      const SolverOptions& opts, double t) {
    if (opts.right_bc_fn) return opts.right_bc_fn(t);
    switch (opts.right_bc) {
        case RightBc::zero:
            return 0.0;
        case RightBc::dirichlet_from_data:
            return params.C * powl_pos(-init_ref.grid.x_hi, params.alpha);
        case RightBc::tail_asymptotic:
            return fast_diffusion_upper(init_ref.grid.x_hi, t, params);
        case RightBc::neumann_zero:
            return 0.0; // unused; flux suppressed instead
    }
    return 0.0;
}

// One backward-Euler diffusion(+optional lagged reaction) solve.
void implicit_sweep(std::vector<double>& u, double dt, double t_new,
                    const SolutionField& state, const Params& params,
                    const SolverOptions& opts, bool include_reaction,
                    StepDiagnostics* diag) {
    const int n = state.grid.n_cells;
    const double dx = state.grid.dx();
    const double p = params.p, eps = opts.eps_reg;
    const double uL = left_bc_value(state, params, opts, t_new);
    const double uR = right_bc_value(state, params, opts, t_new);
    const bool neumann = (opts.right_bc == RightBc::neumann_zero);

    std::vector<double> v = u, vn, lo(n), di(n), up(n), rhs(n);
    const double r = dt / dx;

    int it = 0;
    for (; it < opts.picard_max; ++it) {
        std::fill(lo.begin(), lo.end(), 0.0);
        std::fill(up.begin(), up.end(), 0.0);
        std::fill(di.begin(), di.end(), 1.0);
        rhs = u;

        for (int i = 1; i < n; ++i) {
            const double a = coef((v[i] - v[i - 1]) / dx, eps, p);
            di[i - 1] += r * a / dx;
            up[i - 1] -= r * a / dx;
            di[i] += r * a / dx;
            lo[i] -= r * a / dx;
        }
        const double aL = coef((v[0] - uL) / (0.5 * dx), eps, p);
        di[0] += r * aL / (0.5 * dx);
        rhs[0] += r * aL / (0.5 * dx) * uL;
        if (!neumann) {
            const double aR = coef((uR - v[n - 1]) / (0.5 * dx), eps, p);
            di[n - 1] += r * aR / (0.5 * dx);
            rhs[n - 1] += r * aR / (0.5 * dx) * uR;
        }
        if (include_reaction && params.b != 0.0) {
            if (params.beta == 1.0) {
                for (int i = 0; i < n; ++i) di[i] += dt * params.b;
            } else {
                for (int i = 0; i < n; ++i) {
                    const double w = std::max(v[i], opts.u_cap);
                    di[i] += dt * params.b * powl_pos(w, params.beta - 1.0);
                }
            }
        }

        thomas(lo, di, up, rhs, vn);

        double dmax = 0.0, umax = 0.0;
        for (int i = 0; i < n; ++i) {
            dmax = std::max(dmax, std::fabs(vn[i] - v[i]));
            umax = std::max(umax, std::fabs(vn[i]));
        }
        v.swap(vn);
        const double scale = opts.picard_relative ? std::max(umax, 1e-300)
                                                  : std::max(1.0, umax);
        if (dmax <= opts.picard_tol * scale) break;
    }
    if (it >= opts.picard_max)
        throw PicardDivergence("Picard iteration exceeded picard_max");

    u = std::move(v);
    if (diag) diag->picard_iters += it + 1;
}

void clip_negative(std::vector<double>& u, double dx, StepDiagnostics* diag) {
    double clipped = 0.0;
    double total = 0.0;
    for (double& ui : u) {
        total += std::fabs(ui) * dx;
        if (ui < 0.0) {
            clipped += -ui * dx;
            ui = 0.0;
        }
    }
    if (diag) {
        diag->clipped_mass += clipped;
        if (total > 0.0 && clipped > 1e-10 * total) diag->clip_warning = true;
    }
}

}  // namespace

std::vector<double> Grid1D::centers() const {
    std::vector<double> c(n_cells);
    for (int i = 0; i < n_cells; ++i) c[i] = x_center(i);
    return c;
}

void Grid1D::check() const {
    if (!(x_lo < 0.0 && 0.0 < x_hi))
        throw RangeError("grid must contain the origin strictly inside");
    if (n_cells < 64) throw RangeError("grid needs at least 64 cells");
}

SolutionField initial_data(const Grid1D& grid, const Params& params) {
    grid.check();
    SolutionField s;
    s.grid = grid;
    s.t = 0.0;
    s.u.resize(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double x = grid.x_center(i);
        s.u[i] = (x < 0.0) ? params.C * powl_pos(-x, params.alpha) : 0.0;
    }
    return s;
}

SolutionField custom_data(const Grid1D& grid,
                          const std::function<double(double)>& u0) {
    grid.check();
    SolutionField s;
    s.grid = grid;
    s.t = 0.0;
    s.u.resize(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i) s.u[i] = u0(grid.x_center(i));
    return s;
}

SolutionField step(const SolutionField& state, double dt, const Params& params,
                   const SolverOptions& opts, StepDiagnostics* diag) {
    SolutionField out = state;
    out.t = state.t + dt;
    out.interpolated = false;

    if (opts.diffusion_off) {
        for (double& ui : out.u) ui = reaction_exact_solution(ui, dt, params);
        return out;
    }

    switch (opts.splitting) {
        case Splitting::unsplit_implicit:
            implicit_sweep(out.u, dt, out.t, state, params, opts,
                           /*include_reaction=*/true, diag);
            break;
        case Splitting::strang_exact_reaction:
            if (params.b != 0.0)
                for (double& ui : out.u)
                    ui = reaction_exact_solution(ui, 0.5 * dt, params);
            implicit_sweep(out.u, dt, out.t, state, params, opts,
                           /*include_reaction=*/false, diag);
            if (params.b != 0.0)
                for (double& ui : out.u)
                    ui = reaction_exact_solution(ui, 0.5 * dt, params);
            break;
    }
    clip_negative(out.u, state.grid.dx(), diag);
    return out;
}

std::vector<SolutionField> solve_from(const SolutionField& init,
                                      const Params& params,
                                      const SolverOptions& opts, double t_end,
                                      const std::vector<double>& snapshot_times,
                                      SolveDiagnostics* diag) {
    const auto t_start = std::chrono::steady_clock::now();
    std::vector<double> times = snapshot_times;
    std::sort(times.begin(), times.end());

    std::vector<SolutionField> snaps;
    snaps.reserve(times.size());

    SolutionField cur = init;
    const double dx = init.grid.dx();
    const double initial_mass =
        std::accumulate(cur.u.begin(), cur.u.end(), 0.0) * dx;

    std::size_t si = 0;
    while (si < times.size() && times[si] <= 0.0) {
        snaps.push_back(cur);
        ++si;
    }

    // Relative time epsilon: an absolute one breaks runs with t_end ~ 1e-15.
    const double tiny = 1e-9 * t_end;
    const double dt_floor = std::min(1e-14, opts.dt_init * 1e-2);
    double dt = opts.dt_init;
    double clipped_total = 0.0;
    long steps = 0, picard_total = 0;
    bool clip_warning = false;

    while (cur.t < t_end - tiny) {
        double dt_eff = std::min(dt, t_end - cur.t);
        if (opts.dt_rel > 0.0)
            dt_eff = std::min(dt_eff, std::max(opts.dt_rel * cur.t, opts.dt_init));

        StepDiagnostics sd;
        SolutionField next;
        try {
            next = step(cur, dt_eff, params, opts, &sd);
        } catch (const PicardDivergence&) {
            dt = 0.5 * dt_eff;
            if (dt < dt_floor) throw;
            continue;
        }
        ++steps;
        picard_total += sd.picard_iters;
        clipped_total += sd.clipped_mass;

        while (si < times.size() && times[si] <= next.t + tiny) {
            const double ts = times[si];
            SolutionField snap = next;
            snap.t = ts;
            if (next.t > cur.t && ts < next.t - tiny) {
                const double w = (ts - cur.t) / (next.t - cur.t);
                for (int i = 0; i < init.grid.n_cells; ++i)
                    snap.u[i] = (1.0 - w) * cur.u[i] + w * next.u[i];
                snap.interpolated = true;
            }
            snaps.push_back(std::move(snap));
            ++si;
        }
        cur = std::move(next);
        dt = std::min(dt * 1.2, opts.dt_max);
    }

    if (diag) {
        diag->steps = steps;
        diag->picard_total = picard_total;
        diag->clipped_mass_total = clipped_total;
        diag->initial_mass = initial_mass;
        diag->clip_warning =
            clip_warning ||
            (initial_mass > 0.0 && clipped_total > 1e-8 * initial_mass);
        diag->wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t_start)
                .count();
    }
    return snaps;
}

std::vector<SolutionField> solve(const Params& params, const Grid1D& grid,
                                 const SolverOptions& opts, double t_end,
                                 const std::vector<double>& snapshot_times,
                                 SolveDiagnostics* diag) {
    return solve_from(initial_data(grid, params), params, opts, t_end,
                      snapshot_times, diag);
}

double scaling_identity_check(const Params& params, double k,
                              const Grid1D& grid, const SolverOptions& opts,
                              double t_probe) {
    if (k == 1.0) return 0.0;
    const double p = params.p, beta = params.beta;
    const double s = (p - 1.0 - beta) / p;
    const double scale = powl_pos(k, -s);

    // Both sides come from one run on the reference grid: the identity says
    // u(x, t_probe) = k u(k^{-s} x, t2) with t2 = k^{beta-1} t_probe. The
    // right side is interpolated at the scaled positions, so the deviation
    // measures how well the continuum symmetry survives discretization
    // (running the right side on a scaled grid instead would map cell-to-cell
    // and make the discrete scheme exactly covariant, leaving only solver
    // noise with no refinement trend).
    const double t2 = powl_pos(k, beta - 1.0) * t_probe;
    const auto snaps = solve(params, grid, opts, std::max(t_probe, t2),
                             {std::min(t_probe, t2), std::max(t_probe, t2)});
    const auto& ua = (t_probe <= t2 ? snaps.front() : snaps.back()).u;
    const SolutionField& rhs = (t_probe <= t2 ? snaps.back() : snaps.front());

    const auto xs = grid.centers();
    double umax = 0.0;
    for (double v : ua) umax = std::max(umax, v);
    double worst = 0.0;
    // Inner 90% of the domain only: the frozen far-field Dirichlet value is
    // exact only at the critical amplitude, and its mismatch forms a
    // boundary layer that is no fault of the scaling symmetry.
    const double margin = 0.1 * (grid.x_hi - grid.x_lo);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double ref = ua[i];
        if (ref <= 1e-6 * umax) continue;
        if (xs[i] < grid.x_lo + margin || xs[i] > grid.x_hi - margin) continue;
        const double xq = xs[i] * scale;
        if (xq <= xs.front() || xq >= xs.back()) continue;
        const auto it = std::upper_bound(xs.begin(), xs.end(), xq);
        const std::size_t j = it - xs.begin();
        const double w = (xq - xs[j - 1]) / (xs[j] - xs[j - 1]);
        const double ub = (1.0 - w) * rhs.u[j - 1] + w * rhs.u[j];
        worst = std::max(worst, std::fabs(k * ub - ref) / ref);
    }
    return worst;
}

}  // namespace plap
