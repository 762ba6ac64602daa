#pragma once

#include <filesystem>
#include <vector>

#include "plap/io.hpp"

namespace plap {

// Scripted verification pipelines for Theorems 1-5 plus the supporting
// property checks. Shared between the CLI `verify-theorem` command and the
// acceptance suite so that both report the same measurements.
//
// Each function runs its locked configuration and returns one CheckResult
// per quantitative clause. When artifact_dir is non-empty, CSV artifacts
// (snapshots, traces, profiles) are written there and recorded in files.

struct ExperimentOutput {
    std::vector<CheckResult> checks;
    std::vector<ManifestFile> files;
};

ExperimentOutput verify_theorem1(const std::filesystem::path& artifact_dir = {});
ExperimentOutput verify_theorem2(const std::filesystem::path& artifact_dir = {});
ExperimentOutput verify_theorem3(const std::filesystem::path& artifact_dir = {});
ExperimentOutput verify_theorem4(const std::filesystem::path& artifact_dir = {});
ExperimentOutput verify_theorem5(const std::filesystem::path& artifact_dir = {});

// Supporting acceptance pipelines (not tied to a single theorem):
ExperimentOutput check_phi_module();          // F inversion, ODE residual, bound
ExperimentOutput check_barrier_signs();       // 200x50 sign certificates
ExperimentOutput check_scaling_identity();    // (C9'') at k = 2 + refinement
ExperimentOutput check_classifier_partition();// 10^4 random draws + manifold
ExperimentOutput check_solver_validation();   // b=0 source-type oracle

}  // namespace plap
