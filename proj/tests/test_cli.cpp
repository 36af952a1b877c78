#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "otto/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "otto");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = otto::cli::cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("otto_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("help, version and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gslc", "--bogus"}).code == 2);
    CHECK(run({"gslc", "--set", "bogus=1"}).code == 2);
    CHECK(run({"gslc", "--config", "/nonexistent/config.json"}).code == 2);
    CHECK(run({"gslc", "--set", "omega_h=0.5"}).code == 2);
    CHECK(run({"phase"}).code == 2);
}

TEST_CASE("single points print flows and the figure of merit") {
    const auto e = run({"gslc", "--set", "g_h=0", "--set", "g_c=0", "--set", "omega_h=2"});
    CHECK(e.code == 0);
    CHECK(e.out.find("regime=engine") != std::string::npos);
    CHECK(e.out.find("eta=0.5\n") != std::string::npos);
    const auto r = run({"gslc", "--set", "g_h=0", "--set", "g_c=0", "--set", "omega_h=7"});
    CHECK(r.out.find("xi=0.166666666667\n") != std::string::npos);
    const auto n = run({"nelc", "--set", "tau=100"});
    CHECK(n.code == 0);
    CHECK(n.out.find("power=") != std::string::npos);
    CHECK(n.out.find("residual=") != std::string::npos);
}

TEST_CASE("check subcommand passes on a clean build") {
    const auto c = run({"check"});
    CHECK(c.code == 0);
    CHECK(c.out.find("FAIL") == std::string::npos);
}

TEST_CASE("phase run writes declared outputs deterministically") {
    const fs::path dir = scratch("phase");
    const fs::path cfg = dir / "phase.json";
    {
        std::ofstream(cfg) << R"({"mode":"gslc","omega_h":2,"omega_c":1,"beta_h":0.2,"beta_c":1,
            "axes":["g_h:0.1:2:12","g_c:0.05:1:12"],
            "outputs":[")" << (dir / "a.csv").string() << R"(","json:)" << (dir / "a.json").string()
                          << R"(","svg:)" << (dir / "a.svg").string() << R"(:regime"]})";
    }
    // A bare path without a kind prefix is a usage error.
    CHECK(run({"phase", "--config", cfg.string()}).code == 2);
    {
        std::ofstream(cfg) << R"({"mode":"gslc","omega_h":2,"omega_c":1,"beta_h":0.2,"beta_c":1,
            "axes":["g_h:0.1:2:12","g_c:0.05:1:12"],
            "outputs":["csv:)" << (dir / "a.csv").string() << R"(","json:)" << (dir / "a.json").string()
                          << R"(","svg:)" << (dir / "a.svg").string() << R"(:regime"]})";
    }
    REQUIRE(run({"phase", "--config", cfg.string(), "--set", "threads=1"}).code == 0);
    const auto csv1 = slurp(dir / "a.csv"), json1 = slurp(dir / "a.json"), svg1 = slurp(dir / "a.svg");
    REQUIRE(run({"phase", "--config", cfg.string(), "--set", "threads=5"}).code == 0);
    CHECK(csv1 == slurp(dir / "a.csv"));
    CHECK(json1 == slurp(dir / "a.json"));
    CHECK(svg1 == slurp(dir / "a.svg"));
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 145);
    fs::remove_all(dir);
}

TEST_CASE("tau-scan subcommand") {
    const fs::path dir = scratch("tau");
    const auto r = run({"tau-scan", "--set", "axes=tau:1:1e4:5:log", "--set", "outputs=csv:" + (dir / "t.csv").string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "t.csv"));
    CHECK(run({"tau-scan"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("unwritable output is a run failure") {
    CHECK(run({"phase", "--set", "axes=g_h:0.1:1:2", "--set", "outputs=csv:/nonexistent/dir/x.csv"}).code == 1);
}
