#pragma once

#include <cmath>

namespace plap {

// Problem quintuple for u_t - (|u_x|^{p-2} u_x)_x + b u^beta = 0,
// u(x,0) = C (-x)_+^alpha, in the fast diffusion range 1 < p < 2.
struct Params {
    double p = 1.5;     // diffusion exponent, 1 < p < 2
    double b = 1.0;     // reaction coefficient (sign matters)
    double beta = 0.25; // reaction exponent, > 0
    double alpha = 2.0; // initial-data exponent, > 0
    double C = 1.0;     // initial-data amplitude, > 0
};

// Throws RangeError / PositivityError / AdmissibilityError; returns params unchanged.
Params validate(const Params& params);

// alpha threshold separating regions I / II / III (for b>0, beta<p-1).
inline double alpha_threshold(double p, double beta) { return p / (p - 1.0 - beta); }

// Exact power of a positive base via log-space, safe for large |exponent|.
inline double powl_pos(double base, double expo) {
    if (expo == 0.0) return 1.0;
    return std::exp(expo * std::log(base));
}

}  // namespace plap
