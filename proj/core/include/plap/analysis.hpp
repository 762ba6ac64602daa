#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plap/params.hpp"
#include "plap/solver.hpp"

namespace plap {

struct InterfaceSample {
    double t;
    double eta;           // position; -inf marks an identically-zero snapshot
    bool no_interface;    // u > threshold at the right boundary
    bool all_zero;        // u <= threshold everywhere
};

struct InterfaceTrace {
    std::vector<InterfaceSample> samples; // t strictly increasing
    double threshold_abs;
};

// Default edge interpolation power for the given parameters: the
// diffusion-absorption contact power (p-1-beta)/p in regions I/II, the
// reaction contact power 1-beta in region III, raw u (power 1) otherwise.
double default_edge_power(const Params& params);

// eta(t) = sup{x : u > threshold} per snapshot, sub-cell interpolated on
// u^edge_power (default_edge_power when omitted).
InterfaceTrace extract_interface(const std::vector<SolutionField>& snapshots,
                                 const Params& params,
                                 double threshold_abs = 1e-10,
                                 std::optional<double> edge_power = std::nullopt);

// Variant with a per-snapshot threshold rel * (b(1-beta) t)^{1/(1-beta)}
// (the reaction amplitude scale), for shrinking fronts whose own amplitude
// decays like a power of t.
InterfaceTrace extract_interface_scaled(const std::vector<SolutionField>& snapshots,
                                        const Params& params, double rel,
                                        std::optional<double> edge_power = std::nullopt);

struct PowerLawFit {
    double exponent;
    double coefficient; // from the fit intercept
    double r_squared;
    double t_min, t_max;
    std::vector<std::pair<double, double>> local_slopes; // (t, slope) pairs
};

// Least squares of log|eta| on log t over the window. Requires >= 8 samples;
// throws DegenerateFit if eta changes sign inside the window.
PowerLawFit fit_power_law(const InterfaceTrace& trace, double t_min, double t_max);

// Intercept-free amplitude estimate exp(mean(log|eta| - e log t)) given a
// known exponent e; unlike the regression intercept it does not amplify
// slope error by extrapolating to t = 1.
double compensated_coefficient(const InterfaceTrace& trace,
                               double t_min, double t_max, double exponent);

struct SandwichReport {
    long lower_checked = 0, upper_checked = 0;
    long lower_violations = 0, upper_violations = 0;
    double worst_lower_margin = 0.0; // most positive (lower - u)/scale
    double worst_upper_margin = 0.0; // most positive (u - upper)/scale
    double tol_rel = 0.0;
};

using BoundFn = std::function<double(double x, double t)>;
using ValidityFn = std::function<bool(double x, double t)>;

// Counts violations of lower <= u <= upper beyond tol_rel (relative to the
// local max(|u|, bound)); each side restricted to its validity region and
// to the inner 90% of the domain.
SandwichReport check_sandwich(const std::vector<SolutionField>& snapshots,
                              const BoundFn& lower, const ValidityFn& lower_valid,
                              const BoundFn& upper, const ValidityFn& upper_valid,
                              double tol_rel);

struct TailFit {
    double slope;
    double coefficient;
    double r_squared;
};

// Regression of log u on log x (log_log = true) or on x (semi-log) over the
// window, excluding the outer 10% of the domain. Throws WindowTooNoisy if
// r^2 < 0.99. When expected_slope is given, the coefficient is the
// compensated estimate exp(mean(log u - slope * log x)) (log-log only).
TailFit tail_asymptote(const SolutionField& snapshot, double x_min, double x_max,
                       bool log_log = true,
                       std::optional<double> expected_slope = std::nullopt);

// Richardson-style discretization error estimate between a run and its
// half-resolution pair: max |fine - coarse| over the paired quantity.
double richardson_estimate(double coarse_value, double fine_value);

}  // namespace plap
