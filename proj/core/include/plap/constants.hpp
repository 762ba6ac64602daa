#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "plap/params.hpp"
#include "plap/regimes.hpp"

namespace plap {

// ---- scalar constants -------------------------------------------------

// C* = [ b |p-1-beta|^p / ((1+beta)(p-1) p^{p-1}) ]^{1/(p-1-beta)}.
// Requires b > 0 and beta != p-1 (classically 0 < beta < p-1; the same
// formula with |p-1-beta| is reused by the region-V constant zeta8 where
// beta > p-1, hence the looser precondition on beta).
double critical_amplitude(const Params& params);

// ln D with D = (2(p-1) p^{p-1} (2-p)^{1-p})^{1/(2-p)}. Always finite on
// (1,2); D itself overflows double once p is close enough to 2 (the exponent
// 1/(2-p) diverges), so the log form is the primary API.
double fast_diffusion_constant_log(double p);
double fast_diffusion_constant(double p); // exp of the above; +inf on overflow

// ell* = C^{-1/alpha} (b(1-beta))^{1/(alpha(1-beta))} (region III).
double shrink_coefficient(const Params& params);

struct Region1Bracket {
    double C1, zeta1, zeta2, ell0;
};
Region1Bracket region1_bracket(const Params& params);

struct Region2Constants {
    // C > C* side (need A1):
    double zeta3 = 0.0, zeta4 = 0.0, C2 = 0.0;
    // C < C* side:
    double zeta5 = 0.0;              // positive Appendix value; used as -zeta5
    double Gamma = 0.0, delta_star = 0.0, ell2 = 0.0, zeta6 = 0.0, C3 = 0.0;
    bool maximizer_at_boundary = false; // argmax of g within 1e-6 of {0,1}
    bool has_upper_branch = false;      // zeta3/zeta4/C2 populated (A1 given)
    bool has_lower_branch = false;      // zeta5 populated (lambda, ell1 given)
};
Region2Constants region2_constants(const Params& params, const ProfileConstants& profile);

struct Region5Constants {
    double xi1, xi2, xi3, xi4;
    double C5, C6, C7;
    double mu_b;
    double zeta8; // only for b>0, p-1 < beta < 1; 0 otherwise
};
Region5Constants region5_constants(const Params& params, double A0, double epsilon);

// Derivative-free maximization of g over [lo, hi]; bracket shrunk to
// width <= tol. Returns the midpoint of the final bracket.
double golden_section_maximize(const std::function<double(double)>& g,
                               double lo, double hi, double tol = 1e-10);

// ---- provenance ledger -------------------------------------------------

struct LedgerEntry {
    std::string name;
    double value;
    std::string formula_id;             // citation key into the source text
    std::vector<std::string> inputs_used;
};

struct ConstantsLedger {
    std::vector<LedgerEntry> entries;   // insertion-ordered
    const LedgerEntry* find(const std::string& name) const;
    std::string to_json() const;
};

// Builds the ledger for the region the params classify into. Entries whose
// formulas need profile inputs (A0, A1, lambda, ell1) are present only when
// those inputs are supplied; epsilon feeds the region-V constants.
ConstantsLedger build_ledger(const Params& params,
                             const ProfileConstants& profile = {},
                             double epsilon = 0.05);

}  // namespace plap
