// plap: command-line laboratory for the fast-diffusion p-Laplacian
// reaction-diffusion problem u_t - (|u_x|^{p-2}u_x)_x + b u^beta = 0 with
// initial data C(-x)_+^alpha.
//
// Subcommands: classify, constants, solve, profile, phi, verify-theorem N,
// sweep. Exit codes: 0 pass, 1 check failure, 2 invalid parameters, 64 usage.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plap/analysis.hpp"
#include "plap/closed_forms.hpp"
#include "plap/constants.hpp"
#include "plap/errors.hpp"
#include "plap/experiments.hpp"
#include "plap/io.hpp"
#include "plap/phi.hpp"
#include "plap/profiles.hpp"
#include "plap/regimes.hpp"
#include "plap/solver.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitUsage = 64;

struct Cfg {
    plap::Params params;
    plap::Grid1D grid{-4.0, 4.0, 1024};
    plap::SolverOptions opts;
    std::string output_dir;
    long seed = 12345;
};

std::filesystem::path resolve_output_dir(const Cfg& cfg) {
    std::filesystem::path dir = cfg.output_dir.empty()
                                    ? plap::output_dir()
                                    : std::filesystem::path(cfg.output_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string config_echo(const Cfg& cfg) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << "p=" << cfg.params.p << " b=" << cfg.params.b
       << " beta=" << cfg.params.beta << " alpha=" << cfg.params.alpha
       << " C=" << cfg.params.C << " grid=[" << cfg.grid.x_lo << ","
       << cfg.grid.x_hi << "]x" << cfg.grid.n_cells << " seed=" << cfg.seed;
    return os.str();
}

// Shared per-subcommand options. CLI11's config-file support reads key=value
// files; command-line flags always win over file values.
void add_common(CLI::App* cmd, Cfg& cfg) {
    cmd->add_option("--p", cfg.params.p, "diffusion exponent, 1 < p < 2");
    cmd->add_option("--b", cfg.params.b, "reaction coefficient");
    cmd->add_option("--beta", cfg.params.beta, "reaction exponent");
    cmd->add_option("--alpha", cfg.params.alpha, "initial-data exponent");
    cmd->add_option("--C", cfg.params.C, "initial-data amplitude");
    cmd->add_option("--x-lo", cfg.grid.x_lo, "left domain endpoint");
    cmd->add_option("--x-hi", cfg.grid.x_hi, "right domain endpoint");
    cmd->add_option("--n-cells", cfg.grid.n_cells, "number of cells");
    cmd->add_option("--eps-reg", cfg.opts.eps_reg, "gradient regularization");
    cmd->add_option("--dt-init", cfg.opts.dt_init, "initial time step");
    cmd->add_option("--dt-max", cfg.opts.dt_max, "maximum time step");
    cmd->add_option("--dt-rel", cfg.opts.dt_rel, "relative dt cap (dt <= dt_rel*t)");
    cmd->add_option("--picard-tol", cfg.opts.picard_tol, "Picard tolerance");
    cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
    cmd->add_option("--output-dir", cfg.output_dir,
                    "output root (default: $PLAP_OUTPUT_DIR or cwd)");
    cmd->set_config("--config", "", "key=value config file; flags win");
}

void print_checks(const std::vector<plap::CheckResult>& checks) {
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << "  value=" << c.value << " target=" << c.target;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
}

int finish_manifest(plap::RunManifest man, const std::filesystem::path& dir,
                    const std::string& stem,
                    std::chrono::steady_clock::time_point t0) {
    man.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    plap::write_text(dir / (stem + "_manifest.json"), man.to_json());
    print_checks(man.checks);
    std::cout << "manifest: " << (dir / (stem + "_manifest.json")).string()
              << "\n";
    return man.all_pass() ? kExitPass : kExitCheckFail;
}

std::vector<double> logspaced(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (n - 1));
    return v;
}

int cmd_classify(const Cfg& cfg) {
    const plap::Params params = plap::validate(cfg.params);
    const auto label = plap::classify(params);
    const auto law = plap::predicted_interface_law(params);

    nlohmann::json j;
    j["region"] = plap::to_string(label.region);
    j["subcase"] = plap::to_string(label.subcase);
    j["interface"]["direction"] = plap::to_string(law.direction);
    if (std::isfinite(law.exponent)) j["interface"]["exponent"] = law.exponent;
    using Kind = plap::CoefficientInfo::Kind;
    switch (law.coefficient.kind) {
        case Kind::bracket:
            j["interface"]["coefficient_bracket"] = {law.coefficient.lo,
                                                     law.coefficient.hi};
            break;
        case Kind::exact:
            j["interface"]["coefficient"] = law.coefficient.value;
            break;
        case Kind::sign_only:
            j["interface"]["coefficient_sign"] = law.coefficient.sign;
            break;
        case Kind::none:
            break;
    }
    std::cout << "region " << plap::to_string(label.region) << " ("
              << plap::to_string(label.subcase) << ")\n";
    if (std::isfinite(law.exponent))
        std::cout << "interface exponent " << law.exponent << ", direction "
                  << plap::to_string(law.direction) << "\n";
    else
        std::cout << "no interface (infinite speed of propagation)\n";

    const auto dir = resolve_output_dir(cfg);
    plap::write_text(dir / "classify.json", j.dump(2));
    std::cout << "wrote " << (dir / "classify.json").string() << "\n";
    return kExitPass;
}

int cmd_constants(const Cfg& cfg) {
    const plap::Params params = plap::validate(cfg.params);
    const auto ledger = plap::build_ledger(params);
    for (const auto& e : ledger.entries) {
        std::cout.precision(15);
        std::cout << e.name << " = " << e.value << "    [" << e.formula_id
                  << "]\n";
    }
    const auto dir = resolve_output_dir(cfg);
    plap::write_text(dir / "constants.json", ledger.to_json());
    std::cout << "wrote " << (dir / "constants.json").string() << "\n";
    return kExitPass;
}

int cmd_solve(const Cfg& cfg, double t_end, int n_snapshots) {
    const auto t0 = std::chrono::steady_clock::now();
    const plap::Params params = plap::validate(cfg.params);
    if (!(t_end > 0.0)) throw plap::RangeError("t-end must be positive");
    cfg.grid.check();

    const auto times = logspaced(t_end / 100.0, t_end, std::max(2, n_snapshots));
    plap::SolveDiagnostics diag;
    const auto snaps =
        plap::solve(params, cfg.grid, cfg.opts, t_end, times, &diag);

    const auto dir = resolve_output_dir(cfg);
    plap::RunManifest man;
    man.command = "solve";
    man.config_echo = config_echo(cfg);

    const auto snap_path = dir / "snapshots.csv";
    plap::write_snapshots_csv(snap_path, snaps);
    man.add_file(snap_path);

    const auto trace = plap::extract_interface(snaps, params, 1e-10);
    std::vector<std::vector<double>> rows;
    for (const auto& s : trace.samples)
        if (!s.no_interface && !s.all_zero) rows.push_back({s.t, s.eta});
    const auto trace_path = dir / "interface.csv";
    plap::write_csv(trace_path, {"t", "eta"}, rows);
    man.add_file(trace_path);

    if (diag.clip_warning)
        std::cout << "warning: cumulative negativity clipping exceeded 1e-8 "
                     "of the initial mass\n";
    std::cout << "steps " << diag.steps << ", snapshots " << snaps.size()
              << ", interface samples " << rows.size() << "\n";
    return finish_manifest(std::move(man), dir, "solve", t0);
}

int cmd_profile(const Cfg& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const plap::Params params = plap::validate(cfg.params);
    const auto dir = resolve_output_dir(cfg);
    plap::RunManifest man;
    man.command = "profile";
    man.config_echo = config_echo(cfg);

    nlohmann::json j;
    plap::ProfileTable table;
    if (params.b == 0.0) {
        const auto f0 = plap::extract_f0(params.p, params.alpha, params.C,
                                         cfg.grid, cfg.opts);
        table = f0.table;
        j["A0_unit"] = f0.A0_unit;
        j["A0"] = f0.A0;
    } else {
        if (plap::classify(params).region != plap::Region::II)
            throw plap::AdmissibilityError(
                "profile extraction targets region II (b=0 gives f0); "
                "use alpha = p/(p-1-beta)");
        const auto f1 = plap::extract_f1(params, cfg.grid, cfg.opts);
        table = f1.table;
        if (f1.profile.zeta_star) j["zeta_star"] = *f1.profile.zeta_star;
        if (f1.profile.A1) j["A1"] = *f1.profile.A1;
        if (f1.profile.lambda) j["lambda"] = *f1.profile.lambda;
        if (f1.profile.ell1) j["ell1"] = *f1.profile.ell1;
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < table.points.size(); ++i)
        rows.push_back({table.points[i], table.values[i]});
    const auto csv_path = dir / "profile.csv";
    plap::write_csv(csv_path,
                    {table.variable == plap::ProfileTable::Variable::zeta
                         ? "zeta"
                         : "xi",
                     "f"},
                    rows);
    man.add_file(csv_path);
    plap::write_text(dir / "profile.json", j.dump(2));
    man.add_file(dir / "profile.json");
    std::cout << j.dump(2) << "\n";
    return finish_manifest(std::move(man), dir, "profile", t0);
}

int cmd_phi(const Cfg& cfg, double x_max, int n_points) {
    const auto t0 = std::chrono::steady_clock::now();
    const plap::Params params = plap::validate(cfg.params);
    if (!(params.b > 0.0))
        throw plap::AdmissibilityError("phi profile requires b > 0");
    const auto prof = plap::phi_profile(params, x_max, n_points);

    const auto dir = resolve_output_dir(cfg);
    plap::RunManifest man;
    man.command = "phi";
    man.config_echo = config_echo(cfg);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < prof.size(); ++i)
        rows.push_back({prof.x[i], prof.log_phi[i], prof.phi(i)});
    const auto path = dir / "phi.csv";
    plap::write_csv(path, {"x", "log_phi", "phi"}, rows);
    man.add_file(path);
    std::cout << "phi tabulated at " << prof.size() << " points on [0, "
              << x_max << "]\n";
    return finish_manifest(std::move(man), dir, "phi", t0);
}

int cmd_verify(const Cfg& cfg, int n, bool params_given) {
    const auto t0 = std::chrono::steady_clock::now();
    if (n < 1 || n > 5)
        throw plap::RangeError("verify-theorem takes n in {1..5}");
    if (params_given)
        throw plap::AdmissibilityError(
            "verify-theorem runs a locked configuration consistent with the "
            "theorem hypotheses; parameter flags are not accepted here");

    const auto dir = resolve_output_dir(cfg);
    plap::ExperimentOutput out;
    switch (n) {
        case 1: out = plap::verify_theorem1(dir); break;
        case 2: out = plap::verify_theorem2(dir); break;
        case 3: out = plap::verify_theorem3(dir); break;
        case 4: out = plap::verify_theorem4(dir); break;
        default: out = plap::verify_theorem5(dir); break;
    }
    plap::RunManifest man;
    man.command = "verify-theorem " + std::to_string(n);
    man.config_echo = "locked theorem-" + std::to_string(n) + " configuration";
    man.checks = out.checks;
    man.files = out.files;
    return finish_manifest(std::move(man), dir,
                           "verify_theorem" + std::to_string(n), t0);
}

int cmd_sweep(const Cfg& cfg, double a_min, double a_max, double b_min,
              double b_max, int na, int nb) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(a_max > a_min) || !(b_max > b_min) || na < 2 || nb < 2) {
        std::cerr << "sweep: empty or invalid range\n";
        return kExitUsage;
    }
    // Deterministic row-major iteration so identical configs give
    // byte-identical CSV output.
    std::ostringstream csv;
    csv.imbue(std::locale::classic());
    csv.precision(17);
    csv << "alpha,beta,region,subcase\n";
    long failures = 0;
    for (int i = 0; i < na; ++i) {
        const double alpha = a_min + (a_max - a_min) * i / (na - 1);
        for (int k = 0; k < nb; ++k) {
            const double beta = b_min + (b_max - b_min) * k / (nb - 1);
            plap::Params pr = cfg.params;
            pr.alpha = alpha;
            pr.beta = beta;
            try {
                const auto label = plap::classify(plap::validate(pr));
                csv << alpha << "," << beta << ","
                    << plap::to_string(label.region) << ","
                    << plap::to_string(label.subcase) << "\n";
            } catch (const std::exception& e) {
                ++failures;
                csv << alpha << "," << beta << ",invalid,"
                    << "\"" << e.what() << "\"\n";
            }
        }
    }
    const auto dir = resolve_output_dir(cfg);
    const auto path = dir / "sweep.csv";
    plap::write_text(path, csv.str());

    plap::RunManifest man;
    man.command = "sweep";
    man.config_echo = config_echo(cfg);
    man.add_file(path);
    std::cout << "sweep: " << na * nb << " points, " << failures
              << " invalid\n";
    return finish_manifest(std::move(man), dir, "sweep", t0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the fast-diffusion p-Laplacian "
                 "reaction-diffusion free-boundary problem"};
    app.require_subcommand(1);
    Cfg cfg;

    auto* classify = app.add_subcommand("classify", "classify (p,b,beta,alpha,C)");
    add_common(classify, cfg);

    auto* constants = app.add_subcommand("constants", "evaluate the constants ledger");
    add_common(constants, cfg);

    auto* solve = app.add_subcommand("solve", "run the PDE solver");
    add_common(solve, cfg);
    double t_end = 0.1;
    int n_snapshots = 20;
    solve->add_option("--t-end", t_end, "final time");
    solve->add_option("--snapshots", n_snapshots, "number of snapshot times");

    auto* profile = app.add_subcommand("profile", "extract f0 (b=0) or f1 (region II)");
    add_common(profile, cfg);

    auto* phi = app.add_subcommand("phi", "tabulate the region-IV profile phi");
    add_common(phi, cfg);
    double x_max = 10.0;
    int n_points = 1001;
    phi->add_option("--x-max", x_max, "right end of the phi grid");
    phi->add_option("--n-points", n_points, "number of phi grid points");

    auto* verify = app.add_subcommand("verify-theorem", "run a scripted theorem check");
    add_common(verify, cfg);
    int theorem_n = 0;
    verify->add_option("n", theorem_n, "theorem number, 1..5")->required();

    auto* sweep = app.add_subcommand("sweep", "(alpha,beta) regime atlas at fixed p,b,C");
    add_common(sweep, cfg);
    double a_min = 0.2, a_max = 10.0, bt_min = 0.02, bt_max = 3.0;
    int na = 50, nb = 50;
    sweep->add_option("--alpha-min", a_min);
    sweep->add_option("--alpha-max", a_max);
    sweep->add_option("--beta-min", bt_min);
    sweep->add_option("--beta-max", bt_max);
    sweep->add_option("--alpha-count", na);
    sweep->add_option("--beta-count", nb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(cfg);
        if (app.got_subcommand(constants)) return cmd_constants(cfg);
        if (app.got_subcommand(solve)) return cmd_solve(cfg, t_end, n_snapshots);
        if (app.got_subcommand(profile)) return cmd_profile(cfg);
        if (app.got_subcommand(phi)) return cmd_phi(cfg, x_max, n_points);
        if (app.got_subcommand(verify)) {
            const bool params_given =
                verify->count("--p") || verify->count("--b") ||
                verify->count("--beta") || verify->count("--alpha") ||
                verify->count("--C");
            return cmd_verify(cfg, theorem_n, params_given);
        }
        if (app.got_subcommand(sweep))
            return cmd_sweep(cfg, a_min, a_max, bt_min, bt_max, na, nb);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFail;
    }
    return kExitUsage;
}
