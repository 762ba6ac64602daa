#include "plap/regimes.hpp"

#include <cmath>
#include <sstream>

#include "plap/constants.hpp"
#include "plap/errors.hpp"

namespace plap {

namespace {

bool rel_equal(double a, double b, double rtol) {
    return std::fabs(a - b) <= rtol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

Params validate(const Params& params) {
    if (!(params.p > 1.0 && params.p < 2.0)) {
        std::ostringstream os;
        os << "p = " << params.p << " outside the fast diffusion range (1, 2)";
        throw RangeError(os.str());
    }
    if (!(params.beta > 0.0)) throw PositivityError("beta must be positive");
    if (!(params.alpha > 0.0)) throw PositivityError("alpha must be positive");
    if (!(params.C > 0.0)) throw PositivityError("C must be positive");
    if (params.b < 0.0 && params.beta < 1.0) {
        throw AdmissibilityError(
            "b < 0 with beta < 1 is inadmissible (no uniqueness/comparison)");
    }
    return params;
}

RegimeLabel classify(const Params& params, double boundary_rtol) {
    validate(params);
    const double p = params.p, b = params.b, beta = params.beta;

    if (b == 0.0) return {Region::V, Subcase::infinite_speed_b_zero};
    if (b < 0.0) return {Region::V, Subcase::infinite_speed_b_neg};

    // b > 0 from here. beta vs p-1 decides the vertical split of Fig. 1.
    if (rel_equal(beta, p - 1.0, boundary_rtol)) {
        if (beta < 1.0) return {Region::IV, Subcase::infinite_speed_b_pos};
        // beta = p-1 >= 1 cannot happen for p < 2.
    }
    if (beta > p - 1.0) return {Region::V, Subcase::infinite_speed_b_pos};

    // 0 < beta < p-1: the alpha threshold splits I / II / III.
    const double thr = alpha_threshold(p, beta);
    if (rel_equal(params.alpha, thr, boundary_rtol)) {
        const double cs = critical_amplitude(params);
        if (rel_equal(params.C, cs, boundary_rtol)) return {Region::II, Subcase::stationary};
        return {Region::II, params.C > cs ? Subcase::expanding : Subcase::shrinking};
    }
    if (params.alpha < thr) return {Region::I, Subcase::none};
    return {Region::III, Subcase::none};
}

InterfaceLaw predicted_interface_law(const Params& params,
                                     const std::optional<ProfileConstants>& profile,
                                     double boundary_rtol) {
    const RegimeLabel label = classify(params, boundary_rtol);
    const double p = params.p, beta = params.beta;
    InterfaceLaw law{};

    switch (label.region) {
        case Region::I: {
            law.exponent = (p - 1.0 - beta) / (p * (1.0 - beta));
            law.direction = Direction::right;
            const Region1Bracket br = region1_bracket(params);
            law.coefficient.kind = CoefficientInfo::Kind::bracket;
            law.coefficient.lo = br.zeta1;
            law.coefficient.hi = br.zeta2;
            break;
        }
        case Region::II: {
            law.exponent = (p - 1.0 - beta) / (p * (1.0 - beta));
            if (label.subcase == Subcase::stationary) {
                law.direction = Direction::none;
                law.coefficient.kind = CoefficientInfo::Kind::exact;
                law.coefficient.value = 0.0;
                break;
            }
            const bool expanding = (label.subcase == Subcase::expanding);
            law.direction = expanding ? Direction::right : Direction::left;
            law.coefficient.kind = CoefficientInfo::Kind::sign_only;
            law.coefficient.sign = expanding ? 1 : -1;
            if (profile) {
                // Bracket (C6'b) when the profile inputs allow it.
                const Region2Constants rc = region2_constants(params, *profile);
                if (expanding && rc.has_upper_branch) {
                    law.coefficient.kind = CoefficientInfo::Kind::bracket;
                    law.coefficient.lo = rc.zeta3;
                    law.coefficient.hi = rc.zeta4;
                } else if (!expanding && rc.has_lower_branch) {
                    law.coefficient.kind = CoefficientInfo::Kind::bracket;
                    law.coefficient.lo = -rc.zeta5;
                    law.coefficient.hi = -rc.zeta6;
                }
            }
            break;
        }
        case Region::III: {
            law.exponent = 1.0 / (params.alpha * (1.0 - beta));
            law.direction = Direction::left;
            law.coefficient.kind = CoefficientInfo::Kind::exact;
            law.coefficient.value = -shrink_coefficient(params);
            break;
        }
        case Region::IV:
        case Region::V: {
            law.exponent = std::nan("");
            law.direction = Direction::no_interface;
            law.coefficient.kind = CoefficientInfo::Kind::none;
            break;
        }
    }
    return law;
}

const char* to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::IV: return "IV";
        case Region::V: return "V";
    }
    return "?";
}

const char* to_string(Subcase s) {
    switch (s) {
        case Subcase::none: return "none";
        case Subcase::expanding: return "expanding";
        case Subcase::shrinking: return "shrinking";
        case Subcase::stationary: return "stationary";
        case Subcase::undetermined: return "undetermined";
        case Subcase::infinite_speed_b_pos: return "infinite_speed_b_pos";
        case Subcase::infinite_speed_b_neg: return "infinite_speed_b_neg";
        case Subcase::infinite_speed_b_zero: return "infinite_speed_b_zero";
    }
    return "?";
}

const char* to_string(Direction d) {
    switch (d) {
        case Direction::right: return "right";
        case Direction::left: return "left";
        case Direction::none: return "none";
        case Direction::no_interface: return "no_interface";
    }
    return "?";
}

}  // namespace plap
