#pragma once

#include <functional>

namespace plap {

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b] to the given
// absolute tolerance. Intervals are bisected until the embedded error
// estimate on each piece is below its share of the budget.
double integrate(const std::function<double(double)>& f,
                 double a, double b,
                 double abs_tol = 1e-10,
                 int max_depth = 60);

}  // namespace plap
