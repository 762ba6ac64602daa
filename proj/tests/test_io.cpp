#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plap/io.hpp"

using namespace plap;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "plap_io_test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("CSV format: header, '.' decimals, LF endings, byte-identical") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.csv";
    const fs::path b = tmp.path / "b.csv";
    const std::vector<std::string> header{"t", "x", "u"};
    const std::vector<std::vector<double>> rows{{0.1, -2.5, 3.0},
                                                {0.2, 1.0 / 3.0, 1e-30}};
    write_csv(a, header, rows);
    write_csv(b, header, rows);

    const std::string text = slurp(a);
    CHECK(text.rfind("t,x,u\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.find(',') != std::string::npos);
    CHECK(text.find("0.1") != std::string::npos);
    CHECK(text.back() == '\n');
    // repeat runs are byte-identical
    CHECK(file_hash(a) == file_hash(b));
    // round trip precision: max_digits10 reproduces 1/3 exactly on re-parse
    CHECK(text.find("0.3333333333333333") != std::string::npos);
}

TEST_CASE("file hash distinguishes contents") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.txt";
    const fs::path b = tmp.path / "b.txt";
    write_text(a, "hello\n");
    write_text(b, "hellp\n");
    CHECK(file_hash(a) != file_hash(b));
    CHECK(file_hash(a).size() == 16); // 64-bit hex
}

TEST_CASE("snapshots CSV") {
    TempDir tmp;
    Grid1D grid{-1.0, 1.0, 64};
    SolutionField s = custom_data(grid, [](double x) { return x * x; });
    s.t = 0.5;
    const fs::path p = tmp.path / "snap.csv";
    write_snapshots_csv(p, {s});
    const std::string text = slurp(p);
    CHECK(text.rfind("t,x,u\n", 0) == 0);
    // header + 64 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 65);
}

TEST_CASE("manifest JSON parses and reflects check status") {
    TempDir tmp;
    const fs::path f = tmp.path / "out.csv";
    write_csv(f, {"a"}, {{1.0}});

    RunManifest m;
    m.command = "plap solve";
    m.add_file(f);
    m.checks.push_back({"alpha_bound", true, 1.0, 1.0, 0.1, ""});
    CHECK(m.all_pass());
    m.checks.push_back({"beta_bound", false, 2.0, 1.0, 0.1, "too big"});
    CHECK_FALSE(m.all_pass());

    const auto j = nlohmann::json::parse(m.to_json());
    CHECK(j.at("command") == "plap solve");
    CHECK(j.at("files").size() == 1);
    CHECK(j.at("files")[0].at("hash") == file_hash(f));
    CHECK(j.at("checks").size() == 2);
    CHECK(j.at("checks")[1].at("pass") == false);
}

TEST_CASE("output directory honors PLAP_OUTPUT_DIR") {
    TempDir tmp;
    ::setenv("PLAP_OUTPUT_DIR", tmp.path.c_str(), 1);
    CHECK(output_dir() == tmp.path);
    ::unsetenv("PLAP_OUTPUT_DIR");
    CHECK(output_dir() == fs::current_path());
}
