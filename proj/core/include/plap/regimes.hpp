#pragma once

#include <optional>

#include "plap/params.hpp"

namespace plap {

enum class Region { I, II, III, IV, V };

enum class Subcase {
    none,                  // regions I, III carry no subcase
    expanding,             // region II, C > C*
    shrinking,             // region II, C < C*
    stationary,            // region II, C = C* (exact power-law data)
    undetermined,          // region II, C = C* with lower-order terms (open case)
    infinite_speed_b_pos,  // regions IV / V with b > 0
    infinite_speed_b_neg,  // region V with b < 0
    infinite_speed_b_zero, // region V with b = 0
};

struct RegimeLabel {
    Region region;
    Subcase subcase;
};

enum class Direction { right, left, none, no_interface };

// Coefficient knowledge for eta(t) ~ coeff * t^exponent.
struct CoefficientInfo {
    enum class Kind { bracket, exact, sign_only, none } kind = Kind::none;
    double lo = 0.0, hi = 0.0; // bracket endpoints (kind == bracket)
    double value = 0.0;        // exact value (kind == exact)
    int sign = 0;              // +1 / -1 / 0 (kind == sign_only)
};

struct InterfaceLaw {
    double exponent;   // power of t in eta(t); NaN when no interface exists
    Direction direction;
    CoefficientInfo coefficient;
};

// Region-II profile data extracted from a rescaled run (Lemma 3.3) plus the
// b=0 amplitude A0 = f(0) (Lemma 3.1). Only the fields a given use needs
// must be set.
struct ProfileConstants {
    std::optional<double> A0;        // f(0), b = 0 profile
    std::optional<double> A1;        // f1(0), region II with C > C*
    std::optional<double> lambda;    // u(-ell1, 1), region II with C < C*
    std::optional<double> ell1;      // probe abscissa for lambda
    std::optional<double> zeta_star; // measured support edge of f1
};

// Relative tolerance used for the measure-zero regime boundaries
// (alpha = p/(p-1-beta), beta = p-1, C = C*).
inline constexpr double kBoundaryRtol = 1e-12;

RegimeLabel classify(const Params& params, double boundary_rtol = kBoundaryRtol);

InterfaceLaw predicted_interface_law(
    const Params& params,
    const std::optional<ProfileConstants>& profile = std::nullopt,
    double boundary_rtol = kBoundaryRtol);

const char* to_string(Region r);
const char* to_string(Subcase s);
const char* to_string(Direction d);

}  // namespace plap
