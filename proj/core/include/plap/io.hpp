#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "plap/solver.hpp"

namespace plap {

// Default output root: $PLAP_OUTPUT_DIR if set, else the current directory.
std::filesystem::path output_dir();

// CSV with '.' decimal separator, '\n' line endings, and a header row.
// Values are written with max_digits10 so identical runs are byte-identical.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::filesystem::path& path, const std::string& content);

// Snapshot CSV: columns t, x, u.
void write_snapshots_csv(const std::filesystem::path& path,
                         const std::vector<SolutionField>& snapshots);

// FNV-1a 64-bit content hash, hex-encoded (manifest integrity).
std::string file_hash(const std::filesystem::path& path);

struct ManifestFile {
    std::string path;
    std::string hash;
};

struct CheckResult {
    std::string name;
    bool pass;
    double value = 0.0;   // measured quantity
    double target = 0.0;  // expected value / bound
    double tol = 0.0;     // tolerance used
    std::string detail;
};

struct RunManifest {
    std::string command;
    std::string config_echo;
    double wall_seconds = 0.0;
    std::vector<ManifestFile> files;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
    void add_file(const std::filesystem::path& path);
};

}  // namespace plap
