#include "plap/io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "plap/errors.hpp"

namespace plap {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic()); // '.' decimal separator, always
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

std::filesystem::path output_dir() {
    if (const char* env = std::getenv("PLAP_OUTPUT_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::current_path();
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary); // '\n' endings on all platforms
    if (!out) throw std::runtime_error("cannot open " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
}

void write_snapshots_csv(const std::filesystem::path& path,
                         const std::vector<SolutionField>& snapshots) {
    std::vector<std::vector<double>> rows;
    for (const auto& s : snapshots)
        for (int i = 0; i < s.grid.n_cells; ++i)
            rows.push_back({s.t, s.grid.x_center(i), s.u[i]});
    write_csv(path, {"t", "x", "u"}, rows);
}

std::string file_hash(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot hash " + path.string());
    std::uint64_t h = 14695981039346656037ull;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

bool RunManifest::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void RunManifest::add_file(const std::filesystem::path& path) {
    files.push_back({path.string(), file_hash(path)});
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config_echo;
    j["wall_seconds"] = wall_seconds;
    j["files"] = nlohmann::json::array();
    for (const auto& f : files)
        j["files"].push_back({{"path", f.path}, {"hash", f.hash}});
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"value", c.value},
                               {"target", c.target},
                               {"tol", c.tol},
                               {"detail", c.detail}});
    j["all_pass"] = all_pass();
    return j.dump(2);
}

}  // namespace plap
