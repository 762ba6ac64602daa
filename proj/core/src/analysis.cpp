#include "plap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plap/errors.hpp"
#include "plap/profiles.hpp"
#include "plap/regimes.hpp"

namespace plap {

namespace {

struct LinFit {
    double slope, intercept, r2;
};

LinFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = slope * xs[i] + intercept;
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    const double r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    return {slope, intercept, r2};
}

InterfaceTrace extract_with_thresholds(const std::vector<SolutionField>& snapshots,
                                       const std::vector<double>& thresholds,
                                       double edge_power, double report_threshold) {
    InterfaceTrace trace;
    trace.threshold_abs = report_threshold;
    trace.samples.reserve(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const auto& s = snapshots[i];
        InterfaceSample sample{};
        sample.t = s.t;
        const double eta = support_edge(s, thresholds[i], edge_power);
        if (std::isnan(eta)) {
            sample.no_interface = true;
            sample.eta = std::numeric_limits<double>::quiet_NaN();
        } else if (!std::isfinite(eta)) {
            sample.all_zero = true;
            sample.eta = -std::numeric_limits<double>::infinity();
        } else {
            sample.eta = eta;
        }
        trace.samples.push_back(sample);
    }
    return trace;
}

}  // namespace

double default_edge_power(const Params& params) {
    const RegimeLabel label = classify(params);
    switch (label.region) {
        case Region::I:
        case Region::II:
            // Diffusion-absorption front: u ~ (eta - x)^{p/(p-1-beta)}, so
            // u^{(p-1-beta)/p} is locally linear at the contact.
            return (params.p - 1.0 - params.beta) / params.p;
        case Region::III:
            // Reaction-dominated front: u ~ (eta - x)^{1/(1-beta)} (the ubar
            // contact), so u^{1-beta} is the linear variable.
            return 1.0 - params.beta;
        default:
            return 1.0; // no compactly supported front; raw u
    }
}

InterfaceTrace extract_interface(const std::vector<SolutionField>& snapshots,
                                 const Params& params, double threshold_abs,
                                 std::optional<double> edge_power) {
    const double ep = edge_power.value_or(default_edge_power(params));
    std::vector<double> thresholds(snapshots.size(), threshold_abs);
    return extract_with_thresholds(snapshots, thresholds, ep, threshold_abs);
}

InterfaceTrace extract_interface_scaled(const std::vector<SolutionField>& snapshots,
                                        const Params& params, double rel,
                                        std::optional<double> edge_power) {
    const double ep = edge_power.value_or(default_edge_power(params));
    std::vector<double> thresholds(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const double amp = powl_pos(params.b * (1.0 - params.beta) *
                                        std::max(snapshots[i].t, 0.0),
                                    1.0 / (1.0 - params.beta));
        thresholds[i] = rel * amp;
    }
    return extract_with_thresholds(snapshots, thresholds, ep, rel);
}

PowerLawFit fit_power_law(const InterfaceTrace& trace, double t_min, double t_max) {
    std::vector<double> lt, le, ts;
    int sign = 0;
    for (const auto& s : trace.samples) {
        if (s.t < t_min || s.t > t_max || s.no_interface || s.all_zero) continue;
        const int si = (s.eta > 0.0) ? 1 : (s.eta < 0.0 ? -1 : 0);
        if (si == 0) continue;
        if (sign == 0) sign = si;
        if (si != sign)
            throw DegenerateFit("eta changes sign inside the fit window");
        lt.push_back(std::log(s.t));
        le.push_back(std::log(std::fabs(s.eta)));
        ts.push_back(s.t);
    }
    if (lt.size() < 8)
        throw DegenerateFit("fewer than 8 interface samples in the window");

    const LinFit f = least_squares(lt, le);
    PowerLawFit fit;
    fit.exponent = f.slope;
    fit.coefficient = std::exp(f.intercept);
    fit.r_squared = f.r2;
    fit.t_min = t_min;
    fit.t_max = t_max;
    for (std::size_t i = 0; i + 1 < lt.size(); ++i) {
        const double slope = (le[i + 1] - le[i]) / (lt[i + 1] - lt[i]);
        fit.local_slopes.emplace_back(std::sqrt(ts[i] * ts[i + 1]), slope);
    }
    return fit;
}

double compensated_coefficient(const InterfaceTrace& trace, double t_min,
                               double t_max, double exponent) {
    double sum = 0.0;
    int n = 0;
    for (const auto& s : trace.samples) {
        if (s.t < t_min || s.t > t_max || s.no_interface || s.all_zero) continue;
        if (s.eta == 0.0) continue;
        sum += std::log(std::fabs(s.eta)) - exponent * std::log(s.t);
        ++n;
    }
    if (n == 0) throw DegenerateFit("no samples for compensated coefficient");
    return std::exp(sum / n);
}

SandwichReport check_sandwich(const std::vector<SolutionField>& snapshots,
                              const BoundFn& lower, const ValidityFn& lower_valid,
                              const BoundFn& upper, const ValidityFn& upper_valid,
                              double tol_rel) {
    SandwichReport rep;
    rep.tol_rel = tol_rel;
    for (const auto& s : snapshots) {
        const double span = s.grid.x_hi - s.grid.x_lo;
        const double x_min_in = s.grid.x_lo + 0.05 * span;
        const double x_max_in = s.grid.x_hi - 0.05 * span;
        for (int i = 0; i < s.grid.n_cells; ++i) {
            const double x = s.grid.x_center(i);
            if (x < x_min_in || x > x_max_in) continue;
            const double u = s.u[i];
            if (lower_valid(x, s.t)) {
                const double lo = lower(x, s.t);
                const double scale = std::max({u, lo, 1e-300});
                const double margin = (lo - u) / scale;
                ++rep.lower_checked;
                rep.worst_lower_margin = std::max(rep.worst_lower_margin, margin);
                if (margin > tol_rel) ++rep.lower_violations;
            }
            if (upper_valid(x, s.t)) {
                const double up = upper(x, s.t);
                const double scale = std::max({u, up, 1e-300});
                const double margin = (u - up) / scale;
                ++rep.upper_checked;
                rep.worst_upper_margin = std::max(rep.worst_upper_margin, margin);
                if (margin > tol_rel) ++rep.upper_violations;
            }
        }
    }
    return rep;
}

TailFit tail_asymptote(const SolutionField& snapshot, double x_min, double x_max,
                       bool log_log, std::optional<double> expected_slope) {
    const double span = snapshot.grid.x_hi - snapshot.grid.x_lo;
    const double x_cut = snapshot.grid.x_hi - 0.10 * span;
    std::vector<double> xs, ys;
    for (int i = 0; i < snapshot.grid.n_cells; ++i) {
        const double x = snapshot.grid.x_center(i);
        if (x < x_min || x > x_max || x > x_cut) continue;
        const double u = snapshot.u[i];
        if (!(u > 0.0) || !(x > 0.0)) continue;
        xs.push_back(log_log ? std::log(x) : x);
        ys.push_back(std::log(u));
    }
    if (xs.size() < 8) throw WindowTooNoisy("fewer than 8 positive tail samples");

    const LinFit f = least_squares(xs, ys);
    if (f.r2 < 0.99) throw WindowTooNoisy("tail fit r^2 below 0.99");

    TailFit fit;
    fit.slope = f.slope;
    fit.r_squared = f.r2;
    if (expected_slope && log_log) {
        double sum = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            sum += ys[i] - *expected_slope * xs[i];
        fit.coefficient = std::exp(sum / xs.size());
    } else {
        fit.coefficient = std::exp(f.intercept);
    }
    return fit;
}

double richardson_estimate(double coarse_value, double fine_value) {
    return std::fabs(fine_value - coarse_value);
}

}  // namespace plap
