// Acceptance suite: runs the ten locked verification pipelines and prints
// one [PASS]/[FAIL] line per criterion (with per-clause details indented).
// Exit code 0 iff every criterion passes.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "plap/experiments.hpp"

namespace {

struct Criterion {
    std::string name;
    std::function<plap::ExperimentOutput()> run;
};

}  // namespace

int main() {
    using plap::ExperimentOutput;
    const std::vector<Criterion> criteria{
        {"region I interface law: exponent 2/9 within 5%, coefficient in "
         "[zeta1, zeta2]",
         [] { return plap::verify_theorem1(); }},
        {"region II trichotomy: zeta* sign by amplitude, expanding edge in "
         "[zeta3, zeta4]",
         [] { return plap::verify_theorem2(); }},
        {"region III shrinking interface: exponent 1/4 within 5%, "
         "coefficient -ell* within 10%",
         [] { return plap::verify_theorem3(); }},
        {"region IV instant positivity and exponential tail with phi sandwich",
         [] { return plap::verify_theorem4(); }},
        {"region V (b=0) algebraic tail slope -3 and amplitude D, with upper "
         "bound",
         [] { return plap::verify_theorem5(); }},
        {"phi module: inversion to 1e-8, ODE residual to 1e-6, exponential "
         "bound",
         [] { return plap::check_phi_module(); }},
        {"barrier sign certificates on 200x50 samples, stationary residual "
         "1e-12",
         [] { return plap::check_barrier_signs(); }},
        {"scaling identity: deviation <= 2% at k=2, decreasing under "
         "refinement",
         [] { return plap::check_scaling_identity(); }},
        {"classifier partition: 10^4 draws in exactly one region, threshold "
         "manifold to 1e-12",
         [] { return plap::check_classifier_partition(); }},
        {"solver validation vs source-type solution: error <= 1%, order >= 1.5",
         [] { return plap::check_solver_validation(); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool pass = true;
        std::vector<plap::CheckResult> checks;
        std::string error;
        try {
            checks = criteria[i].run().checks;
            for (const auto& c : checks) pass = pass && c.pass;
            if (checks.empty()) {
                pass = false;
                error = "pipeline produced no checks";
            }
        } catch (const std::exception& e) {
            pass = false;
            error = e.what();
        }
        std::printf("[%s] criterion %zu: %s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str());
        for (const auto& c : checks)
            std::printf("        [%s] %s: value=%.10g target=%.10g tol=%.3g%s%s\n",
                        c.pass ? "ok" : "FAIL", c.name.c_str(), c.value,
                        c.target, c.tol, c.detail.empty() ? "" : " ",
                        c.detail.c_str());
        if (!error.empty())
            std::printf("        exception: %s\n", error.c_str());
        if (!pass) ++failures;
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n",
                int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
