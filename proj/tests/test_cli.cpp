// Drives the built binary end to end: determinism, exit codes, file formats.

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = TRIGSURF_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("trigsurf_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen is byte-identical across runs") {
    TempDir tmp;
    CHECK(run("gen --dim 2 --extents 3,3 --seed 1 --out " + tmp.file("a.json")) == 0);
    CHECK(run("gen --dim 2 --extents 3,3 --seed 1 --out " + tmp.file("b.json")) == 0);
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
    CHECK(run("gen --dim 2 --extents 3,3 --seed 2 --out " + tmp.file("c.json")) == 0);
    CHECK(slurp(tmp.file("a.json")) != slurp(tmp.file("c.json")));
}

TEST_CASE("sample, recover, and score against the truth") {
    TempDir tmp;
    REQUIRE(run("gen --dim 2 --extents 3,3 --seed 4 --out " + tmp.file("p.json")) == 0);
    REQUIRE(run("sample --poly " + tmp.file("p.json") + " --count 8 --seed 5 --out " +
                tmp.file("s.csv")) == 0);
    REQUIRE(run("recover --samples " + tmp.file("s.csv") + " --extents 3,3 --truth " +
                tmp.file("p.json") + " --out " + tmp.file("r.json")) == 0);

    const auto r = nlohmann::json::parse(slurp(tmp.file("r.json")));
    CHECK(r.at("unique").get<bool>());
    CHECK(r.at("null_space_dim").get<int>() == 1);
    CHECK(r.at("match").get<double>() >= 1.0 - 1e-8);
}

TEST_CASE("under-sampled recovery is data, not an error") {
    TempDir tmp;
    REQUIRE(run("gen --dim 2 --extents 3,3 --seed 4 --out " + tmp.file("p.json")) == 0);
    REQUIRE(run("sample --poly " + tmp.file("p.json") + " --count 7 --seed 5 --out " +
                tmp.file("s7.csv")) == 0);
    CHECK(run("recover --samples " + tmp.file("s7.csv") + " --extents 3,3 --out " +
              tmp.file("r7.json")) == 0);
    const auto r = nlohmann::json::parse(slurp(tmp.file("r7.json")));
    CHECK_FALSE(r.at("unique").get<bool>());
}

TEST_CASE("trace emits plot data") {
    TempDir tmp;
    REQUIRE(run("gen --dim 2 --extents 3,3 --seed 4 --out " + tmp.file("p.json")) == 0);
    CHECK(run("trace --poly " + tmp.file("p.json") + " --resolution 64 --out " +
              tmp.file("t.csv")) == 0);
    const std::string csv = slurp(tmp.file("t.csv"));
    CHECK(csv.rfind("x1,x2,component,residual\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') > 10);
}

TEST_CASE("interpolant build and eval") {
    TempDir tmp;
    REQUIRE(run("gen --dim 2 --extents 3,3 --seed 1 --out " + tmp.file("curve.json")) == 0);
    REQUIRE(run("gen --dim 2 --extents 13,13 --seed 2 --out " + tmp.file("f.json")) == 0);
    CHECK(run("interp build --curve " + tmp.file("curve.json") + " --function " +
              tmp.file("f.json") + " --seed 3 --out " + tmp.file("itp.json")) == 0);

    const auto itp = nlohmann::json::parse(slurp(tmp.file("itp.json")));
    CHECK(itp.at("anchors").size() == 48);
    CHECK(itp.at("weights").size() == 48);

    CHECK(run("interp eval --interp " + tmp.file("itp.json") + " --point 0.25,0.5 --function " +
              tmp.file("f.json")) == 0);
}

TEST_CASE("experiment scenario with assertion") {
    TempDir tmp;
    CHECK(run("experiment fig1 --trials 10 --seed 0 --out " + tmp.file("exp") + " --assert") ==
          0);
    CHECK(fs::exists(tmp.path / "exp" / "fig1_summary.json"));
    CHECK(fs::exists(tmp.path / "exp" / "fig1_n7_records.csv"));
    CHECK(fs::exists(tmp.path / "exp" / "fig1_n8_records.csv"));

    const std::string csv = slurp(tmp.path / "exp" / "fig1_n8_records.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 10 trials

    // byte-identical reruns
    CHECK(run("experiment fig1 --trials 10 --seed 0 --out " + tmp.file("exp2")) == 0);
    const auto strip_runtime = [](std::string s) {
        // runtime_ms is the final column; drop it line by line
        std::string out;
        std::istringstream in(s);
        std::string line;
        while (std::getline(in, line)) {
            out += line.substr(0, line.rfind(','));
            out += '\n';
        }
        return out;
    };
    CHECK(strip_runtime(slurp(tmp.path / "exp" / "fig1_n8_records.csv")) ==
          strip_runtime(slurp(tmp.path / "exp2" / "fig1_n8_records.csv")));
    // summaries carry no wall-clock fields and match byte for byte
    CHECK(slurp(tmp.path / "exp" / "fig1_summary.json") ==
          slurp(tmp.path / "exp2" / "fig1_summary.json"));
}

TEST_CASE("custom experiment scenario") {
    TempDir tmp;
    CHECK(run("experiment custom --dim 2 --extents 3,3 --count 8 --trials 5 --seed 0 --out " +
              tmp.file("exp") + " --assert") == 0);
    CHECK(fs::exists(tmp.path / "exp" / "custom_summary.json"));
}

TEST_CASE("invalid inputs exit with code 2") {
    TempDir tmp;
    CHECK(run("gen --dim 2 --extents 4,4") == 2);             // even extents
    CHECK(run("recover --samples " + tmp.file("absent.csv") + " --extents 3,3") == 2);
    CHECK(run("recover") == 2);                               // missing required option
    CHECK(run("experiment fig99") == 2);                      // unknown scenario
    CHECK(run("bogus") == 2);                                 // unknown subcommand

    const auto bad = tmp.file("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK(run("sample --poly " + bad + " --count 1") == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help") == 0);
    CHECK(run("gen --help") == 0);
}
