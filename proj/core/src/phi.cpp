#include "plap/phi.hpp"

#include <algorithm>
#include <cmath>

#include "plap/errors.hpp"
#include "plap/quadrature.hpp"

namespace plap {

namespace {

// F rewritten with y = e^s:
//   F(z) = int_{log z}^{0} [ b/(p-1) + p e^{(2-p)s} / (2(p-1)(2-p)) ]^{-1/p} ds.
// The substitution absorbs the 1/y factor; the integrand is smooth and
// bounded on the whole line (it tends to (b/(p-1))^{-1/p} as s -> -inf),
// which is what makes the z -> 0 tail integrable at fixed cost. In the
// original variable this corresponds to subintervals shrinking
// geometrically toward y = 0.
double F_integrand(double s, const Params& params) {
    const double p = params.p, b = params.b;
    const double bracket =
        b / (p - 1.0) +
        p * std::exp((2.0 - p) * s) / (2.0 * (p - 1.0) * (2.0 - p));
    return std::exp(-std::log(bracket) / p);
}

double F_from_log(double log_z, const Params& params, double abs_tol) {
    return integrate([&params](double s) { return F_integrand(s, params); },
                     log_z, 0.0, abs_tol);
}

}  // namespace

double PhiProfile::phi(std::size_t i) const { return std::exp(log_phi[i]); }

double phi_integral_F(double z, const Params& params) {
    if (!(params.b > 0.0)) throw DomainError("phi_integral_F requires b > 0");
    if (!(z > 0.0 && z <= 1.0))
        throw DomainError("phi_integral_F requires z in (0, 1]");
    if (z == 1.0) return 0.0;
    return F_from_log(std::log(z), params, 1e-10);
}

PhiProfile phi_profile(const Params& params, double x_max, int n_points) {
    if (!(params.b > 0.0)) throw DomainError("phi_profile requires b > 0");
    if (!(x_max > 0.0) || n_points < 2)
        throw DomainError("phi_profile requires x_max > 0 and n_points >= 2");

    constexpr double kLogUnderflow = -690.0; // log(1e-300) ~ -690.8

    PhiProfile prof;
    prof.p = params.p;
    prof.b = params.b;
    prof.x.resize(n_points);
    prof.log_phi.resize(n_points);

    // F is decreasing in z, so log phi decreases along the x grid. The
    // 1e-14 accuracy matters: centered finite differences of the profile
    // divide the phi error by dx^2, so the tabulated values must be
    // accurate well beyond the 1e-6 residual target. To keep that accuracy
    // affordable, F is accumulated incrementally along a unit-step anchor
    // walk (never re-integrated from log z to 0), and each node is solved
    // by Newton with the analytic dF/ds = -integrand, seeded from the
    // previous node. Anchor error accumulates only once per unit of depth.
    double anchor_s = 0.0, anchor_F = 0.0;
    auto segF = [&](double s) {
        return anchor_F + integrate([&params](double t) {
                   return F_integrand(t, params);
               }, s, anchor_s, 1e-14);
    };
    double s_prev = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double x = x_max * i / (n_points - 1);
        prof.x[i] = x;
        if (i == 0) {
            prof.log_phi[0] = 0.0; // phi(0) = 1
            continue;
        }
        // Walk the anchor down until F(anchor_s - 1) >= x, so the target
        // lies within one unit of the anchor.
        while (segF(anchor_s - 1.0) < x) {
            anchor_F = segF(anchor_s - 1.0);
            anchor_s -= 1.0;
            if (anchor_s - 1.0 < kLogUnderflow)
                throw TailUnderflow("phi underflows below 1e-300; reduce x_max");
        }
        // Newton from the previous node (F' = -integrand, bounded away from
        // zero), clamped to the bracket [anchor_s - 1, min(s_prev, anchor_s)].
        const double b_lo = anchor_s - 1.0;
        const double b_hi = std::min(s_prev, anchor_s);
        double s = std::clamp(
            s_prev - (x - prof.x[i - 1]) / F_integrand(s_prev, params),
            b_lo, b_hi);
        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            const double val = segF(s);
            const double ds = (val - x) / F_integrand(s, params);
            s = std::clamp(s + ds, b_lo, b_hi);
            if (std::fabs(val - x) <= 3e-14 || std::fabs(ds) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            // Bisection fallback (F is monotone, so this cannot fail).
            double lo = b_lo, hi = b_hi;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                (segF(mid) > x ? lo : hi) = mid;
            }
            s = 0.5 * (lo + hi);
        }
        if (s < kLogUnderflow)
            throw TailUnderflow("phi underflows below 1e-300; reduce x_max");
        prof.log_phi[i] = s;
        s_prev = s;
    }
    return prof;
}

}  // namespace plap
