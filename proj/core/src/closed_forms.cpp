#include "plap/closed_forms.hpp"

#include <cmath>

#include "plap/constants.hpp"
#include "plap/errors.hpp"

namespace plap {

namespace {

constexpr double kCollar = 1e-12; // exclusion band around free boundaries

// Residual L u for the pure power form u = A (t+tau)^a (x+sigma)^c with
// A > 0, evaluated from the analytic derivatives. Valid for x+sigma > 0.
double power_form_residual(double A, double a, double tau, double c,
                           double sigma, double x, double t,
                           const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta;
    const double T = t + tau, X = x + sigma;
    if (X <= kCollar) throw OnFreeBoundary("power form evaluated at x+sigma <= 0");

    const double u_t = (a == 0.0) ? 0.0 : a * A * powl_pos(T, a - 1.0) * powl_pos(X, c);
    // flux = |u_x|^{p-2} u_x = sign(c) (A|c|)^{p-1} T^{a(p-1)} X^{(c-1)(p-1)}
    // flux_x = sign(c) (A|c|)^{p-1} (c-1)(p-1) T^{a(p-1)} X^{(c-1)(p-1)-1}
    const double sgn = (c > 0.0) ? 1.0 : -1.0;
    const double flux_x = sgn * powl_pos(A * std::fabs(c), p - 1.0) *
                          (c - 1.0) * (p - 1.0) *
                          (a == 0.0 ? 1.0 : powl_pos(T, a * (p - 1.0))) *
                          powl_pos(X, (c - 1.0) * (p - 1.0) - 1.0);
    const double u = A * powl_pos(T, a) * powl_pos(X, c);
    const double reaction = (b == 0.0) ? 0.0 : b * powl_pos(u, beta);
    return u_t - flux_x + reaction;
}

double get(const BarrierSpec& spec, const std::string& key) {
    const auto it = spec.constants.find(key);
    if (it == spec.constants.end())
        throw DomainError("barrier constant missing: " + key);
    return it->second;
}

}  // namespace

// ---- exact solutions ------------------------------------------------------

double reaction_exact_solution(double u0_value, double t, const Params& params) {
    const double b = params.b, beta = params.beta;
    if (u0_value <= 0.0) return 0.0;
    if (beta == 1.0) return u0_value * std::exp(-b * t);
    const double w = powl_pos(u0_value, 1.0 - beta) - b * (1.0 - beta) * t;
    if (w <= 0.0) return 0.0;
    return powl_pos(w, 1.0 / (1.0 - beta));
}

double reaction_only_ubar(double x, double t, const Params& params) {
    if (x >= 0.0) return 0.0;
    const double u0 = params.C * powl_pos(-x, params.alpha);
    return reaction_exact_solution(u0, t, params);
}

double stationary_cstar(double x, const Params& params) {
    if (x <= 0.0) return 0.0;
    const double m = params.p / (params.p - 1.0 - params.beta);
    return critical_amplitude(params) * powl_pos(x, m);
}

double fast_diffusion_upper(double x, double t, const Params& params) {
    const double p = params.p;
    return fast_diffusion_constant(p) * powl_pos(t, 1.0 / (2.0 - p)) *
           powl_pos(x, p / (p - 2.0));
}

double g_mu(double x, double t, double mu, double p) {
    return fast_diffusion_constant(p) * powl_pos(t + mu, 1.0 / (2.0 - p)) *
           powl_pos(x + mu, p / (p - 2.0));
}

double source_type_solution(double x, double t, double p, double C_B) {
    const double a = 1.0 / (2.0 * (p - 1.0));
    const double q = (2.0 - p) / p * powl_pos(2.0 * (p - 1.0), -1.0 / (p - 1.0));
    const double xi = std::fabs(x) * powl_pos(t, -a);
    return powl_pos(t, -a) *
           powl_pos(C_B + q * powl_pos(xi, p / (p - 1.0)),
                    -(p - 1.0) / (2.0 - p));
}

// ---- similarity residuals ---------------------------------------------------

double residual_similarity_zeta(double C0, double zeta0, double zeta,
                                const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta;
    const double m = p / (p - 1.0 - beta);
    const double w = zeta0 - zeta;
    if (std::fabs(w) <= kCollar)
        throw OnFreeBoundary("zeta within the free-boundary collar");
    if (w < 0.0) return 0.0;

    const double T1 = C0 * powl_pos(w, m) / (1.0 - beta);
    const double T2 = (p - 1.0 - beta) / (p * (1.0 - beta)) * zeta * C0 * m *
                      powl_pos(w, m - 1.0);
    const double T3 = -powl_pos(C0 * m, p - 1.0) * (m - 1.0) * (p - 1.0) *
                      powl_pos(w, m * beta);
    const double T4 = b * powl_pos(C0, beta) * powl_pos(w, m * beta);
    return T1 + T2 + T3 + T4;
}

double residual_similarity_zeta_factored(double C0, double zeta0, double zeta,
                                         const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta;
    const double d = p - 1.0 - beta;
    const double m = p / d;
    const double w = zeta0 - zeta;
    if (std::fabs(w) <= kCollar)
        throw OnFreeBoundary("zeta within the free-boundary collar");
    if (w < 0.0) return 0.0;

    const double cs = critical_amplitude(params);
    const double brace = 1.0 - powl_pos(C0 / cs, d) +
                         powl_pos(C0, 1.0 - beta) / (b * (1.0 - beta)) * zeta0 *
                             powl_pos(w, (beta * (1.0 - p) + 1.0) / d);
    return b * powl_pos(C0, beta) * powl_pos(w, m * beta) * brace;
}

double residual_similarity_xi(double C0, double xi0, double xi, double t,
                              const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta,
                 alpha = params.alpha;
    const double P = p + alpha * (2.0 - p);
    const double gamma = p / (2.0 - p);
    const double y = xi0 + xi;
    if (y <= kCollar) throw OnFreeBoundary("xi0 + xi <= 0");

    const double T1 = alpha / P * C0 * powl_pos(y, -gamma);
    const double T2 = xi / P * C0 * gamma * powl_pos(y, -gamma - 1.0);
    const double T3 = -powl_pos(C0 * gamma, p - 1.0) * (gamma + 1.0) *
                      (p - 1.0) * powl_pos(y, -gamma);
    double T4 = 0.0;
    if (b != 0.0) {
        const double t_expo = (p - alpha * (p - 1.0 - beta)) / P;
        T4 = b * powl_pos(t, t_expo) * powl_pos(C0, beta) *
             powl_pos(y, -gamma * beta);
    }
    return T1 + T2 + T3 + T4;
}

double R_xi(double C0, double xi0, double xi, const Params& params) {
    const double p = params.p, alpha = params.alpha;
    const double P = p + alpha * (2.0 - p);
    return alpha -
           2.0 * (p - 1.0) * powl_pos(p, p - 1.0) * P *
               powl_pos(2.0 - p, -p) * powl_pos(C0, p - 2.0) +
           p / (2.0 - p) * xi / (xi0 + xi);
}

// ---- barrier catalog --------------------------------------------------------

BarrierSpec make_barrier(BarrierId id, const Params& params,
                         const ProfileConstants& profile, double epsilon) {
    BarrierSpec spec;
    spec.id = id;
    spec.params = params;

    switch (id) {
        case BarrierId::ThmI_lower: {
            const Region1Bracket br = region1_bracket(params);
            spec.constants = {{"C0", br.C1}, {"zeta0", br.zeta1}};
            spec.target_sign = TargetSign::subsolution;
            spec.region = {0.0, br.zeta1, 1e-3, 1.0};
            break;
        }
        case BarrierId::ThmI_upper: {
            const Region1Bracket br = region1_bracket(params);
            spec.constants = {{"C0", critical_amplitude(params)},
                              {"zeta0", br.zeta2}};
            spec.target_sign = TargetSign::supersolution;
            spec.region = {0.0, br.zeta2, 1e-3, 1.0};
            break;
        }
        case BarrierId::ThmII_lower: {
            const Region2Constants rc = region2_constants(params, profile);
            if (!rc.has_lower_branch)
                throw MissingProfileInput("ThmII_lower needs lambda and ell1");
            spec.constants = {{"C0", critical_amplitude(params)},
                              {"zeta0", -rc.zeta5},
                              {"ell1", *profile.ell1}};
            spec.target_sign = TargetSign::subsolution;
            spec.region = {-*profile.ell1, 0.0, 1e-3, 1.0};
            break;
        }
        case BarrierId::ThmV_tail: {
            if (!profile.A0) throw MissingProfileInput("ThmV_tail needs A0");
            const Region5Constants r5 = region5_constants(params, *profile.A0, epsilon);
            spec.constants = {{"C0", r5.C7}, {"xi0", r5.xi4}};
            spec.target_sign = TargetSign::supersolution;
            spec.region = {0.0, 100.0, 1e-3, 1.0};
            break;
        }
        case BarrierId::ThmV_bneg_tail: {
            spec.constants = {{"eps", epsilon}};
            spec.target_sign = TargetSign::supersolution;
            spec.region = {1e-3, 100.0, 1e-3, 1.0};
            break;
        }
        case BarrierId::B0_upper_gmu: {
            spec.constants = {{"mu", 0.1}};
            spec.target_sign = TargetSign::exact;
            spec.region = {0.0, 100.0, 0.0, 1.0};
            break;
        }
        case BarrierId::Lemma33_g: {
            const double cs = critical_amplitude(params);
            if (!(params.C > cs))
                throw DomainError("Lemma33_g needs C > C*");
            const double C0 = std::sqrt(cs * params.C);
            const double d = params.p - 1.0 - params.beta;
            // S <= 0 requires (-x+t) below the balance point of the two
            // competing terms in Lg = b g^beta S.
            const double w_max =
                powl_pos((powl_pos(C0 / cs, d) - 1.0) * params.b * d /
                             (params.p * powl_pos(C0, 1.0 - params.beta)),
                         d / (1.0 + params.beta * (1.0 - params.p)));
            spec.constants = {{"C0", C0}, {"w_max", w_max}};
            spec.target_sign = TargetSign::subsolution;
            spec.region = {-0.5 * w_max, 0.0, 0.0, 0.5 * w_max};
            break;
        }
        case BarrierId::ReactionOnly_ubar: {
            spec.target_sign = TargetSign::exact;
            spec.region = {-10.0, 0.0, 0.0, 1.0};
            break;
        }
        case BarrierId::Stationary_Cstar: {
            spec.constants = {{"C0", critical_amplitude(params)}};
            spec.target_sign = TargetSign::exact;
            spec.region = {1e-3, 10.0, 0.0, 1.0};
            break;
        }
    }
    return spec;
}

double barrier_value(const BarrierSpec& spec, double x, double t) {
    const Params& pr = spec.params;
    const double p = pr.p, beta = pr.beta;
    switch (spec.id) {
        case BarrierId::ThmI_lower:
        case BarrierId::ThmI_upper:
        case BarrierId::ThmII_lower: {
            const double kappa = (p - 1.0 - beta) / (p * (1.0 - beta));
            const double zeta = x * powl_pos(t, -kappa);
            const double w = get(spec, "zeta0") - zeta;
            if (w <= 0.0) return 0.0;
            return powl_pos(t, 1.0 / (1.0 - beta)) * get(spec, "C0") *
                   powl_pos(w, p / (p - 1.0 - beta));
        }
        case BarrierId::ThmV_tail: {
            const double P = p + pr.alpha * (2.0 - p);
            const double xi = x * powl_pos(t, -1.0 / P);
            return powl_pos(t, pr.alpha / P) * get(spec, "C0") *
                   powl_pos(get(spec, "xi0") + xi, p / (p - 2.0));
        }
        case BarrierId::ThmV_bneg_tail:
            return fast_diffusion_constant(p) *
                   powl_pos(1.0 - get(spec, "eps"), 1.0 / (p - 2.0)) *
                   powl_pos(t, 1.0 / (2.0 - p)) * powl_pos(x, p / (p - 2.0));
        case BarrierId::B0_upper_gmu:
            return g_mu(x, t, get(spec, "mu"), p);
        case BarrierId::Lemma33_g: {
            const double w = -x + t;
            if (w <= 0.0) return 0.0;
            return get(spec, "C0") * powl_pos(w, p / (p - 1.0 - beta));
        }
        case BarrierId::ReactionOnly_ubar:
            return reaction_only_ubar(x, t, pr);
        case BarrierId::Stationary_Cstar:
            return stationary_cstar(x, pr);
    }
    return 0.0;
}

double residual_L(const BarrierSpec& spec, double x, double t) {
    const Params& pr = spec.params;
    const double p = pr.p, b = pr.b, beta = pr.beta;

    switch (spec.id) {
        case BarrierId::ThmI_lower:
        case BarrierId::ThmI_upper:
        case BarrierId::ThmII_lower: {
            // Lg = t^{beta/(1-beta)} L0 f1  (C3'''a)
            const double kappa = (p - 1.0 - beta) / (p * (1.0 - beta));
            const double zeta = x * powl_pos(t, -kappa);
            return powl_pos(t, beta / (1.0 - beta)) *
                   residual_similarity_zeta(get(spec, "C0"), get(spec, "zeta0"),
                                            zeta, pr);
        }
        case BarrierId::ThmV_tail: {
            // Lg = t^{(alpha(p-1)-p)/P} L_t f  (C14'''a)
            const double P = p + pr.alpha * (2.0 - p);
            const double xi = x * powl_pos(t, -1.0 / P);
            return powl_pos(t, (pr.alpha * (p - 1.0) - p) / P) *
                   residual_similarity_xi(get(spec, "C0"), get(spec, "xi0"),
                                          xi, t, pr);
        }
        case BarrierId::ThmV_bneg_tail: {
            const double A = fast_diffusion_constant(p) *
                             powl_pos(1.0 - get(spec, "eps"), 1.0 / (p - 2.0));
            return power_form_residual(A, 1.0 / (2.0 - p), 0.0,
                                       p / (p - 2.0), 0.0, x, t, pr);
        }
        case BarrierId::B0_upper_gmu: {
            const double mu = get(spec, "mu");
            return power_form_residual(fast_diffusion_constant(p),
                                       1.0 / (2.0 - p), mu, p / (p - 2.0), mu,
                                       x, t, pr);
        }
        case BarrierId::Lemma33_g: {
            const double w = -x + t;
            if (std::fabs(w) <= kCollar)
                throw OnFreeBoundary("on the travelling front -x + t = 0");
            if (w < 0.0) return 0.0;
            const double C0 = get(spec, "C0");
            const double m = p / (p - 1.0 - beta);
            const double g_t = C0 * m * powl_pos(w, m - 1.0);
            const double flux_x = powl_pos(C0 * m, p - 1.0) * (m - 1.0) *
                                  (p - 1.0) * powl_pos(w, m * beta);
            const double reaction = b * powl_pos(C0, beta) * powl_pos(w, m * beta);
            return g_t - flux_x + reaction;
        }
        case BarrierId::ReactionOnly_ubar: {
            // Reaction residual ubar_t + b ubar^beta (diffusion omitted):
            // ubar is the exact solution of the absorption ODE.
            const double u = reaction_only_ubar(x, t, pr);
            if (u <= kCollar) return 0.0;
            double u_t;
            if (beta == 1.0) {
                u_t = -b * u;
            } else {
                const double w = powl_pos(pr.C, 1.0 - beta) *
                                 powl_pos(-x, pr.alpha * (1.0 - beta)) -
                                 b * (1.0 - beta) * t;
                u_t = -b * powl_pos(w, beta / (1.0 - beta));
            }
            return u_t + b * powl_pos(u, beta);
        }
        case BarrierId::Stationary_Cstar: {
            if (x <= kCollar) throw OnFreeBoundary("stationary barrier at x <= 0");
            return power_form_residual(critical_amplitude(pr), 0.0, 0.0,
                                       p / (p - 1.0 - beta), 0.0, x, t, pr);
        }
    }
    throw DomainError("unknown barrier id");
}

}  // namespace plap
