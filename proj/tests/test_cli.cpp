#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "seqsearch/cli.hpp"

using seqsearch::cli_main;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "seqsearch");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json last_json_line(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty() && line.front() == '{') last = line;
    return nlohmann::json::parse(last);
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("seqsearch_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("oracle on a DAG file") {
    const auto dir = scratch("dag");
    std::ofstream(dir / "chain3.dag") << "# chain\n3\n1 2\n2 3\n";
    const Result r = run({"oracle", "--dag", (dir / "chain3.dag").string(), "--w", "0.2,0.3,0.5", "--c",
                          "0.5,0.5,0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("search:") != std::string::npos);
    const auto j = last_json_line(r.out);
    CHECK(j["search"] == std::vector<int>{1, 2, 3});
    CHECK(j["cut_index"] == 3);
    // J(1,2,3) = (0.5 + 0.5*0.8 + 0.5*0.5) / 1
    CHECK(j["j_plus"].get<double>() == doctest::Approx(1.15));
}

TEST_CASE("oracle on an edgeless instance") {
    const Result r = run({"oracle", "--n", "2", "--w", "0.5,0.5", "--c", "0.25,1"});
    CHECK(r.code == 0);
    const auto j = last_json_line(r.out);
    CHECK(j["search"] == std::vector<int>{1});
    CHECK(j["j_plus"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("oracle usage errors exit 2 and name the option") {
    Result r = run({"oracle", "--n", "3", "--w", "0.5,0.5", "--c", "0.25,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--w/--c") != std::string::npos);
    r = run({"oracle", "--n", "2", "--w", "0.5,0.5", "--c", "0.25,1", "--strategy", "magic"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--strategy") != std::string::npos);
    r = run({"oracle", "--dag", "/does/not/exist.dag", "--w", "1", "--c", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--dag") != std::string::npos);
    CHECK(run({"oracle", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("smith strategy on a DAG with edges is a runtime error") {
    const auto dir = scratch("smith");
    std::ofstream(dir / "g.dag") << "2\n1 2\n";
    const Result r = run({"oracle", "--dag", (dir / "g.dag").string(), "--w", "0.5,0.5", "--c", "1,1", "--strategy",
                          "smith"});
    CHECK(r.code == 1);
}

TEST_CASE("simulate with a missing config exits 2") {
    const Result r = run({"simulate", "--config", "missing.toml"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--config") != std::string::npos);
}

TEST_CASE("simulate with a bad key exits 2 and names it") {
    const auto dir = scratch("badkey");
    std::ofstream(dir / "c.ini") << "[run]\nbudget = 0\n";
    const Result r = run({"simulate", "--config", (dir / "c.ini").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("run.budget") != std::string::npos);
}

TEST_CASE("preset with overrides writes CSV and SVG") {
    const auto dir = scratch("preset");
    const Result r = run({"preset", "sec5-desk", "--seed", "7", "--out", dir.string(), "--set", "run.budget=300",
                          "--set", "run.replications=2", "--set", "run.checkpoints=5", "--jobs", "2"});
    CHECK(r.code == 0);
    for (const char* f : {"runs.csv", "curve.csv", "regret.svg", "config.ini"})
        CHECK(std::filesystem::exists(dir / f));
    CHECK(run({"preset", "unknown"}).code == 2);
}

TEST_CASE("simulate and sweep") {
    const auto dir = scratch("sweep");
    std::ofstream(dir / "c.ini") << "[instance]\nn = 6\nm = 3\n[run]\npolicies = cucb-v\nbudget = 100\n"
                                    "replications = 2\ncheckpoints = 4\n[output]\ndir = sim\n";
    Result r = run({"simulate", "--config", (dir / "c.ini").string()});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "sim" / "curve.csv"));

    r = run({"sweep", "--config", (dir / "c.ini").string(), "--key", "run.budget", "--values", "50,80", "--out",
             (dir / "sw").string()});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "sw" / "run.budget=50" / "curve.csv"));
    CHECK(std::filesystem::exists(dir / "sw" / "run.budget=80" / "curve.csv"));

    r = run({"sweep", "--config", (dir / "c.ini").string(), "--key", "run.nothing", "--values", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("run.nothing") != std::string::npos);
}

TEST_CASE("output directory from the environment") {
    const auto dir = scratch("env");
    std::ofstream(dir / "c.ini") << "[instance]\nn = 5\nm = 2\n[run]\npolicies = cucb\nbudget = 50\n"
                                    "replications = 1\ncheckpoints = 2\n";
    ::setenv(seqsearch::kOutDirEnv, (dir / "from_env").string().c_str(), 1);
    const Result r = run({"simulate", "--config", (dir / "c.ini").string()});
    ::unsetenv(seqsearch::kOutDirEnv);
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "from_env" / "runs.csv"));
}

TEST_CASE("--set output.dir beats the environment") {
    const auto dir = scratch("env_set");
    std::ofstream(dir / "c.ini") << "[instance]\nn = 5\nm = 2\n[run]\npolicies = cucb\nbudget = 50\n"
                                    "replications = 1\ncheckpoints = 2\n";
    ::setenv(seqsearch::kOutDirEnv, (dir / "from_env").string().c_str(), 1);
    const Result r = run({"simulate", "--config", (dir / "c.ini").string(), "--set",
                          "output.dir=" + (dir / "from_set").string()});
    ::unsetenv(seqsearch::kOutDirEnv);
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "from_set" / "runs.csv"));
    CHECK_FALSE(std::filesystem::exists(dir / "from_env"));
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
