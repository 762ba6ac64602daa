#pragma once

#include <vector>

#include "plap/params.hpp"

namespace plap {

// Monotone profile phi = F^{-1} of the region-IV exact solution
// u = t^{1/(2-p)} phi(x), where
//   F(z) = int_z^1 dy / ( y [ b/(p-1) + p y^{2-p} / (2(p-1)(2-p)) ]^{1/p} ).
//
// Values are stored as log(phi); phi(x) decays exponentially and underflows
// raw doubles long before log(phi) loses conditioning.
struct PhiProfile {
    std::vector<double> x;       // increasing grid, x[0] = 0
    std::vector<double> log_phi; // log phi(x)
    double p, b;

    double phi(std::size_t i) const;
    std::size_t size() const { return x.size(); }
};

// F(z) for z in (0,1]; b > 0. Absolute quadrature tolerance 1e-10.
// Throws DomainError for z outside (0,1].
double phi_integral_F(double z, const Params& params);

// Tabulates phi on n_points uniformly spaced x in [0, x_max] by bisecting
// F(z) = x in s = log z (tolerance 1e-12). Throws TailUnderflow if the
// required phi drops below 1e-300.
PhiProfile phi_profile(const Params& params, double x_max, int n_points);

}  // namespace plap
