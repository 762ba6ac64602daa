#pragma once

#include <map>
#include <string>

#include "plap/params.hpp"
#include "plap/regimes.hpp"

namespace plap {

// ---- exact solutions ----------------------------------------------------

// Pointwise solution of u_t + b u^beta = 0 starting from u0_value:
//   beta != 1 : [u0^{1-beta} - b(1-beta) t]_+^{1/(1-beta)}
//   beta == 1 : u0 * exp(-b t)   (the power form degenerates at beta = 1)
double reaction_exact_solution(double u0_value, double t, const Params& params);

// Reaction-only solution with the paper's initial data, u0 = C(-x)_+^alpha.
double reaction_only_ubar(double x, double t, const Params& params);

// Stationary solution C* x^{p/(p-1-beta)} on x > 0 (exponent sign taken
// literally: positive power for beta < p-1, decaying tail for beta > p-1).
double stationary_cstar(double x, const Params& params);

// b = 0 tail barrier D t^{1/(2-p)} x^{p/(p-2)} and its mollification
// g_mu = D (t+mu)^{1/(2-p)} (x+mu)^{p/(p-2)}, an exact b=0 solution.
double fast_diffusion_upper(double x, double t, const Params& params);
double g_mu(double x, double t, double mu, double p);

// Source-type self-similar solution of u_t = (|u_x|^{p-2}u_x)_x (b = 0),
// used purely as a solver validation oracle:
//   u = t^{-a} (C_B + q |x t^{-a}|^{p/(p-1)})^{-(p-1)/(2-p)},
//   a = 1/(2(p-1)),  q = ((2-p)/p) (2(p-1))^{-1/(p-1)}.
double source_type_solution(double x, double t, double p, double C_B);

// ---- similarity residual operators --------------------------------------

// L^0 f1 for f1 = C0 (zeta0 - zeta)_+^{p/(p-1-beta)} (Eq. C3'''b), evaluated
// term by term from the analytic derivatives. Throws OnFreeBoundary within
// 1e-12 of zeta = zeta0; returns 0 beyond the support.
double residual_similarity_zeta(double C0, double zeta0, double zeta, const Params& params);

// Same quantity via the factored form (C4'''); cross-checks the direct one.
double residual_similarity_zeta_factored(double C0, double zeta0, double zeta, const Params& params);

// L_t f for f = C0 (xi0 + xi)^{p/(p-2)} (Eq. C14'''b), direct evaluation.
double residual_similarity_xi(double C0, double xi0, double xi, double t, const Params& params);

// Bracketed factor R(xi) of (C16'''b); its sign decides sub/supersolution
// for the b = 0 tail barriers.
double R_xi(double C0, double xi0, double xi, const Params& params);

// ---- barrier catalog -----------------------------------------------------

enum class BarrierId {
    ThmI_lower,       // t^{1/(1-beta)} C1 (zeta1 - zeta)_+^{p/(p-1-beta)}, Lg <= 0
    ThmI_upper,       // t^{1/(1-beta)} C* (zeta2 - zeta)_+^{p/(p-1-beta)}, Lg >= 0
    ThmII_lower,      // t^{1/(1-beta)} C* (-zeta5 - zeta)_+^{p/(p-1-beta)}, Lg <= 0
    ThmV_tail,        // t^{alpha/(p+alpha(2-p))} C0 (xi0 + xi)^{p/(p-2)}
    ThmV_bneg_tail,   // D (1-eps)^{1/(p-2)} t^{1/(2-p)} x^{p/(p-2)}, Lg >= 0
    B0_upper_gmu,     // g_mu, exact b=0 solution
    Lemma33_g,        // C0 (-x + t)_+^{p/(p-1-beta)}, C0 in (C*, C), Lg <= 0
    ReactionOnly_ubar,// ubar, exact solution of the reaction ODE
    Stationary_Cstar, // C* x^{p/(p-1-beta)}, Lg = 0
};

enum class TargetSign { subsolution, supersolution, exact };

struct SpaceTimeRect {
    double x_lo, x_hi, t_lo, t_hi;
};

struct BarrierSpec {
    BarrierId id;
    Params params;
    std::map<std::string, double> constants; // named constants the form uses
    SpaceTimeRect region;                    // where the target sign holds
    TargetSign target_sign;
};

// Assembles a BarrierSpec with its constants filled in from `constants`
// (via the profile inputs where required) and the region/target sign the
// proofs use. `epsilon` feeds the region-V constants.
BarrierSpec make_barrier(BarrierId id, const Params& params,
                         const ProfileConstants& profile = {},
                         double epsilon = 0.05);

// Barrier value g(x,t).
double barrier_value(const BarrierSpec& spec, double x, double t);

// Full residual Lg = g_t - (|g_x|^{p-2} g_x)_x + b g^beta from analytic
// derivatives. Throws OnFreeBoundary within 1e-12 of the support edge.
double residual_L(const BarrierSpec& spec, double x, double t);

}  // namespace plap
