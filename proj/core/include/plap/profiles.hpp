#pragma once

#include <vector>

#include "plap/params.hpp"
#include "plap/regimes.hpp"
#include "plap/solver.hpp"

namespace plap {

// Self-similar profile sampled at t = 1 (the paper's extraction time).
struct ProfileTable {
    enum class Variable { xi, zeta };
    Variable variable;
    std::vector<double> points; // increasing similarity coordinate
    std::vector<double> values; // profile values, >= 0
    Params params;
    int n_cells = 0;
    double extraction_time = 1.0;
    double disc_error_est = 0.0; // max-norm Richardson estimate vs half res
};

struct F0Result {
    ProfileTable table; // f0 at C = 1
    double A0_unit;     // f0(0)
    double A0;          // f(0) after the (C2') rescaling to amplitude C
};

// Lemma 3.1 / (C2'): run the b=0 problem with C=1 to t=1; f0(xi) = u(xi,1);
// f(rho) = C^{p/(p+alpha(2-p))} f0(C^{(2-p)/(p+alpha(2-p))} rho).
F0Result extract_f0(double p, double alpha, double C,
                    const Grid1D& grid, const SolverOptions& opts);

// Evaluates the rescaled f at coordinate rho from an f0 table.
double rescale_f0(const F0Result& f0, double C, double p, double alpha, double rho);

struct F1Result {
    ProfileTable table;       // f1(zeta) = u(zeta, 1)
    ProfileConstants profile; // A1 or (lambda, ell1), plus zeta_star
};

// Lemma 3.3: region II run to t = 1. For C > C* extracts A1 = f1(0); for
// C < C* probes lambda = f1(-ell1) at ell1 = 1.5 |zeta*| and verifies the
// (C7'') bound. zeta* is the sub-cell interpolated support edge; throws
// SupportEdgeOutOfDomain within 5 cells of the boundary.
F1Result extract_f1(const Params& params, const Grid1D& grid,
                    const SolverOptions& opts);

// Compares a fresh snapshot at t_probe against the rescaled table; returns
// the max relative deviation where the profile exceeds 1e-6.
double self_similar_consistency(const Params& params, const ProfileTable& table,
                                double t_probe, const Grid1D& grid,
                                const SolverOptions& opts);

// Sub-cell support edge sup{x : u > threshold} of a snapshot, linearized on
// u^edge_power (pass the local contact power of the front). Returns NaN if
// u > threshold at the right boundary, -inf if u <= threshold everywhere.
double support_edge(const SolutionField& s, double threshold, double edge_power);

}  // namespace plap
