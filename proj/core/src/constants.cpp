#include "plap/constants.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "plap/errors.hpp"

namespace plap {

namespace {

// Product of powers evaluated as exp(sum e_i log b_i); the Appendix formulas
// chain 6+ powers whose direct evaluation under/overflows near p -> 2- and
// beta -> (p-1)-.
double logprod(std::initializer_list<std::pair<double, double>> base_expo) {
    double s = 0.0;
    for (const auto& [base, expo] : base_expo) {
        if (expo == 0.0) continue;
        s += expo * std::log(base);
    }
    return std::exp(s);
}

void require_region1_like(const Params& params, const char* who) {
    if (!(params.b > 0.0) || !(params.beta > 0.0) ||
        !(params.beta < params.p - 1.0)) {
        std::ostringstream os;
        os << who << " requires b > 0 and 0 < beta < p-1";
        throw DomainError(os.str());
    }
}

}  // namespace

double critical_amplitude(const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta;
    if (!(b > 0.0)) throw DomainError("critical_amplitude requires b > 0");
    if (beta == p - 1.0)
        throw DomainError("critical_amplitude undefined at beta = p-1");
    const double d = p - 1.0 - beta; // sign-carrying; formula uses |d|
    return logprod({{b, 1.0 / d},
                    {std::fabs(d), p / d},
                    {1.0 + beta, -1.0 / d},
                    {p - 1.0, -1.0 / d},
                    {p, -(p - 1.0) / d}});
}

double fast_diffusion_constant_log(double p) {
    if (!(p > 1.0 && p < 2.0))
        throw RangeError("fast_diffusion_constant requires 1 < p < 2");
    const double s = std::log(2.0) + std::log(p - 1.0) +
                     (p - 1.0) * std::log(p) + (1.0 - p) * std::log(2.0 - p);
    return s / (2.0 - p);
}

double fast_diffusion_constant(double p) {
    return std::exp(fast_diffusion_constant_log(p));
}

double shrink_coefficient(const Params& params) {
    const double p = params.p, b = params.b, beta = params.beta,
                 alpha = params.alpha, C = params.C;
    if (!(b > 0.0 && beta > 0.0 && beta < p - 1.0 &&
          alpha > alpha_threshold(p, beta)))
        throw DomainError("shrink_coefficient requires region III parameters");
    return logprod({{C, -1.0 / alpha},
                    {b * (1.0 - beta), 1.0 / (alpha * (1.0 - beta))}});
}

Region1Bracket region1_bracket(const Params& params) {
    require_region1_like(params, "region1_bracket");
    const double p = params.p, b = params.b, beta = params.beta;
    const double d = p - 1.0 - beta;
    const double q = p * (1.0 - beta);

    Region1Bracket r{};
    r.C1 = logprod({{(1.0 - beta) / (2.0 - p), 1.0 / d}}) * critical_amplitude(params);
    r.zeta1 = logprod({{b, (p - 2.0) / q},
                       {p, (p - 1.0) / p},
                       {p - 1.0, 1.0 / p},
                       {1.0 + beta, 1.0 / p},
                       {d, (beta * (p - 1.0) - 1.0) / q},
                       {(2.0 - p) / (1.0 - beta), (2.0 - p) / q}});
    r.zeta2 = logprod({{b, (p - 2.0) / q},
                       {p - 1.0, 1.0 / p},
                       {p, (p - 1.0) / p},
                       {1.0 + beta, (2.0 - p) / q},
                       {2.0, d / q},
                       {2.0 - p, (beta * (p - 1.0) - 1.0) / q},
                       {1.0 - beta, 1.0},
                       {d, -1.0}});
    r.ell0 = d / (1.0 - beta) * r.zeta2;
    return r;
}

double golden_section_maximize(const std::function<double(double)>& g,
                               double lo, double hi, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > tol) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - gr * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + gr * (b - a);
            gd = g(d);
        }
    }
    return 0.5 * (a + b);
}

Region2Constants region2_constants(const Params& params,
                                   const ProfileConstants& profile) {
    const double p = params.p, b = params.b, beta = params.beta, C = params.C;
    if (!(b > 0.0 && beta > 0.0 && beta < p - 1.0))
        throw DomainError("region2_constants requires b > 0, 0 < beta < p-1");
    const double d = p - 1.0 - beta;
    const double cs = critical_amplitude(params);

    Region2Constants rc{};
    rc.Gamma = 1.0 - powl_pos(C / cs, d / p);

    if (rc.Gamma != 0.0) {
        const double ratio_pow = powl_pos(C / cs, d); // (C/C*)^{p-1-beta}
        const double gamma = rc.Gamma;
        auto g = [&](double delta) {
            if (delta <= 0.0) return 0.0;
            const double base = 1.0 - delta * gamma;
            return powl_pos(delta, (1.0 + beta * (1.0 - p)) / (p * (1.0 - beta))) *
                   (base - ratio_pow * powl_pos(base, 1.0 - p));
        };
        rc.delta_star = golden_section_maximize(g, 0.0, 1.0, 1e-10);
        rc.maximizer_at_boundary =
            (rc.delta_star < 1e-6) || (rc.delta_star > 1.0 - 1e-6);
        const double dg = rc.delta_star * gamma;
        const double bracket =
            (1.0 - dg) - powl_pos(1.0 - dg, 1.0 - p) * ratio_pow;
        rc.ell2 = powl_pos(C, (1.0 + beta - p) / p) *
                  powl_pos(b * (1.0 - beta) / dg * bracket,
                           d / (p * (1.0 - beta)));
        rc.zeta6 = dg * rc.ell2;
        rc.C3 = C * powl_pos(1.0 - dg, p / (1.0 + beta - p));
    }

    if (profile.A1) {
        const double A1 = *profile.A1;
        if (!(A1 > 0.0)) throw DomainError("A1 must be positive");
        rc.zeta3 = logprod({{A1, (p - 2.0) / p},
                            {(1.0 - beta) * (1.0 + beta) * (p - 1.0), 1.0 / p},
                            {p, (p - 1.0) / p},
                            {1.0 + b * (1.0 - beta) * powl_pos(A1, beta - 1.0),
                             -1.0 / p},
                            {d, -1.0}});
        rc.zeta4 = powl_pos(A1 / cs, d / p);
        rc.C2 = A1 * powl_pos(rc.zeta3, -p / d);
        rc.has_upper_branch = true;
    }
    if (profile.lambda && profile.ell1) {
        if (!(*profile.lambda > 0.0) || !(*profile.ell1 > 0.0))
            throw DomainError("lambda and ell1 must be positive");
        rc.zeta5 = *profile.ell1 - powl_pos(*profile.lambda / cs, d / p);
        rc.has_lower_branch = true;
    }
    return rc;
}

Region5Constants region5_constants(const Params& params, double A0,
                                   double epsilon) {
    const double p = params.p, b = params.b, beta = params.beta,
                 alpha = params.alpha;
    const bool region5 = (b > 0.0 && beta > p - 1.0) ||
                         (b < 0.0 && beta >= 1.0) || b == 0.0;
    if (!region5) throw DomainError("region5_constants requires region V (or b=0)");
    if (!(A0 > 0.0)) throw DomainError("A0 must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("epsilon must lie in (0, 1)");

    const double D_log = fast_diffusion_constant_log(p);
    Region5Constants r{};
    r.mu_b = (b < 0.0) ? 1.0 + epsilon : 1.0;

    const bool branch_one = (b > 0.0 && beta >= 1.0 && beta < 2.0 / p);
    r.xi1 = logprod({{A0 - epsilon, (p - 2.0) / p}}) *
            std::exp(D_log * (2.0 - p) / p) *
            (branch_one ? powl_pos(1.0 - epsilon, 1.0 / p) : 1.0);
    r.C5 = (A0 - epsilon) * powl_pos(r.xi1, p / (2.0 - p));

    const double block = 2.0 * (p - 1.0) * powl_pos(p, p - 1.0) *
                         (p + alpha * (2.0 - p)) * r.mu_b /
                         (alpha * powl_pos(2.0 - p, p));
    r.xi2 = powl_pos(A0 + epsilon, (p - 2.0) / p) * powl_pos(block, 1.0 / p);
    r.C6 = powl_pos(block, 1.0 / (2.0 - p));

    r.xi3 = std::exp((p - 2.0) / p * (std::log(A0) - D_log));
    const double lift = 1.0 + p / (alpha * (2.0 - p));
    r.xi4 = r.xi3 * powl_pos(lift, 1.0 / p);
    r.C7 = std::exp(D_log) * powl_pos(lift, 1.0 / (2.0 - p));

    r.zeta8 = 0.0;
    if (b > 0.0 && beta > p - 1.0 && beta < 1.0) {
        const double cs = critical_amplitude(params); // |p-1-beta| form
        const double inner = b * (1.0 - beta) * powl_pos(cs, beta - 1.0) *
                             powl_pos(1.0 - epsilon, beta - 1.0) *
                             (powl_pos(1.0 - epsilon, p - 1.0 - beta) - 1.0);
        r.zeta8 = powl_pos(inner, (p - 1.0 - beta) / (p * (1.0 - beta)));
    }
    return r;
}

// ---- ledger --------------------------------------------------------------

const LedgerEntry* ConstantsLedger::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::string ConstantsLedger::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries) {
        j.push_back({{"name", e.name},
                     {"value", e.value},
                     {"formula_id", e.formula_id},
                     {"inputs_used", e.inputs_used}});
    }
    return j.dump(2);
}

ConstantsLedger build_ledger(const Params& params,
                             const ProfileConstants& profile, double epsilon) {
    const RegimeLabel label = classify(params);
    ConstantsLedger ledger;
    auto add = [&](const std::string& name, double value,
                   const std::string& formula_id,
                   std::vector<std::string> inputs = {}) {
        ledger.entries.push_back({name, value, formula_id, std::move(inputs)});
    };

    add("ln_D", fast_diffusion_constant_log(params.p), "d-constant", {"p"});
    const double D = fast_diffusion_constant(params.p);
    if (std::isfinite(D)) add("D", D, "d-constant", {"p"});

    if (params.b > 0.0 && params.beta != params.p - 1.0)
        add("C_star", critical_amplitude(params), "C*", {"p", "b", "beta"});

    switch (label.region) {
        case Region::I: {
            const Region1Bracket br = region1_bracket(params);
            add("C1", br.C1, "Appendix(1)", {"p", "b", "beta"});
            add("zeta1", br.zeta1, "Appendix(1)", {"p", "b", "beta"});
            add("zeta2", br.zeta2, "Appendix(1)", {"p", "b", "beta"});
            add("ell0", br.ell0, "Appendix(1)", {"p", "b", "beta"});
            break;
        }
        case Region::II: {
            const Region2Constants rc = region2_constants(params, profile);
            add("Gamma", rc.Gamma, "Appendix(2)", {"p", "b", "beta", "C"});
            if (rc.Gamma != 0.0) {
                add("delta_star", rc.delta_star, "Appendix(2)",
                    {"p", "b", "beta", "C"});
                add("ell2", rc.ell2, "Appendix(2)", {"p", "b", "beta", "C"});
                add("zeta6", rc.zeta6, "Appendix(2)", {"p", "b", "beta", "C"});
                add("C3", rc.C3, "Appendix(2)", {"p", "b", "beta", "C"});
            }
            if (rc.has_upper_branch) {
                add("zeta3", rc.zeta3, "Appendix(2)", {"A1"});
                add("zeta4", rc.zeta4, "Appendix(2)", {"A1"});
                add("C2", rc.C2, "Appendix(2)", {"A1"});
            }
            if (rc.has_lower_branch)
                add("zeta5", rc.zeta5, "Appendix(2)", {"lambda", "ell1"});
            break;
        }
        case Region::III:
            add("ell_star", shrink_coefficient(params), "C10'",
                {"p", "b", "beta", "alpha", "C"});
            break;
        case Region::IV:
            add("phi_decay_rate",
                powl_pos(params.b / (params.p - 1.0), 1.0 / params.p),
                "logasymp'.", {"p", "b"});
            break;
        case Region::V: {
            if (profile.A0) {
                const Region5Constants r5 =
                    region5_constants(params, *profile.A0, epsilon);
                const std::vector<std::string> in{"A0", "epsilon"};
                add("xi1", r5.xi1, "Appendix(5)", in);
                add("xi2", r5.xi2, "Appendix(5)", in);
                add("xi3", r5.xi3, "Appendix(5)", {"A0"});
                add("xi4", r5.xi4, "Appendix(5)", {"A0"});
                add("C5", r5.C5, "Appendix(5)", in);
                add("C6", r5.C6, "Appendix(5)", in);
                add("C7", r5.C7, "Appendix(5)", {"A0"});
                add("mu_b", r5.mu_b, "Appendix(5)", {"b", "epsilon"});
                if (r5.zeta8 != 0.0) add("zeta8", r5.zeta8, "Appendix(5)", in);
            }
            break;
        }
    }
    return ledger;
}

}  // namespace plap
