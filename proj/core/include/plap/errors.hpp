#pragma once

#include <stdexcept>
#include <string>

namespace plap {

// Parameter validation failures.
struct RangeError : std::invalid_argument {
    explicit RangeError(const std::string& what) : std::invalid_argument(what) {}
};
struct PositivityError : std::invalid_argument {
    explicit PositivityError(const std::string& what) : std::invalid_argument(what) {}
};
struct AdmissibilityError : std::invalid_argument {
    explicit AdmissibilityError(const std::string& what) : std::invalid_argument(what) {}
};

// A formula was evaluated outside the parameter region it is defined on.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A region-II constant needs A1 (or lambda, ell1) but none was supplied.
struct MissingProfileInput : std::invalid_argument {
    explicit MissingProfileInput(const std::string& what) : std::invalid_argument(what) {}
};

// Barrier residuals are undefined on the barrier's own free boundary curve.
struct OnFreeBoundary : std::domain_error {
    explicit OnFreeBoundary(const std::string& what) : std::domain_error(what) {}
};

// phi(x) would underflow below 1e-300 (x_max too large for double range).
struct TailUnderflow : std::range_error {
    explicit TailUnderflow(const std::string& what) : std::range_error(what) {}
};

// Picard iteration failed to converge within picard_max sweeps.
struct PicardDivergence : std::runtime_error {
    explicit PicardDivergence(const std::string& what) : std::runtime_error(what) {}
};

// Power-law fitting failures.
struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& what) : std::runtime_error(what) {}
};
struct WindowTooNoisy : std::runtime_error {
    explicit WindowTooNoisy(const std::string& what) : std::runtime_error(what) {}
};

// Profile support edge too close to the truncated boundary to trust.
struct SupportEdgeOutOfDomain : std::runtime_error {
    explicit SupportEdgeOutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plap
