#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("curvop_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int code = -1;
    std::string out;

    bool contains(const std::string& needle) const {
        return out.find(needle) != std::string::npos;
    }
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path capture = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());

    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& body) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << body;
    return p.string();
}

} // namespace

TEST_CASE("spectrum of the constant model prints the closed-form values", "[cli]") {
    const RunResult r = run_cli("spectrum --model constant --n 6 --kappa 1");
    CHECK(r.code == 0);
    CHECK(r.contains("N = 20"));
    CHECK(r.contains("mean = 1"));
    CHECK(r.contains("scal = 30"));
}

TEST_CASE("spectrum writes a file that check-cone accepts", "[cli]") {
    const std::string spec_path = (scratch_dir() / "spec6.json").string();
    const RunResult w = run_cli("spectrum --model constant --n 6 --kappa 2 --output " +
                                spec_path);
    REQUIRE(w.code == 0);
    REQUIRE(fs::exists(spec_path));

    const RunResult c =
        run_cli("check-cone --input " + spec_path + " --alpha 1.5 --theta auto");
    CHECK(c.code == 0);
    CHECK(c.contains("member = true"));
}

TEST_CASE("spectrum on a flat tensor file reports zeros", "[cli]") {
    const std::string tensor_path = (scratch_dir() / "flat5.json").string();
    const RunResult m = run_cli("model --model flat --n 5 --output " + tensor_path);
    REQUIRE(m.code == 0);

    const RunResult s = run_cli("spectrum --input " + tensor_path);
    CHECK(s.code == 0);
    CHECK(s.contains("N = 14"));
    CHECK(s.contains("lambda_min = 0"));
    CHECK(s.contains("scal = 0"));
}

TEST_CASE("spectrum rejects a tensor file that breaks the first Bianchi identity",
          "[cli]") {
    const std::string bad = write_file(
        "bad.json",
        R"({"n":4,"entries":[{"i":0,"j":1,"k":2,"l":3,"v":1.0}]})");
    const RunResult r = run_cli("spectrum --input " + bad);
    CHECK(r.code == 2);
    CHECK(r.contains("error:"));
}

TEST_CASE("spectrum rejects unparseable input without crashing", "[cli]") {
    const std::string garbage = write_file("garbage.json", "not json {{{");
    const RunResult r = run_cli("spectrum --input " + garbage);
    CHECK(r.code == 2);

    const RunResult missing = run_cli("spectrum --input /nonexistent/nowhere.json");
    CHECK(missing.code == 2);
}

TEST_CASE("check-cone accepts the round sphere at resolved theta", "[cli]") {
    const RunResult r =
        run_cli("check-cone --model constant --n 6 --kappa 1 --alpha 1.5 --theta auto");
    CHECK(r.code == 0);
    CHECK(r.contains("member = true"));
    CHECK(r.contains("theta = "));
}

TEST_CASE("check-cone rejects negative constant curvature at theta zero", "[cli]") {
    const RunResult r =
        run_cli("check-cone --model constant --n 6 --kappa -1 --alpha 2 --theta 0");
    CHECK(r.code == 1);
    CHECK(r.contains("member = false"));
}

TEST_CASE("check-cone treats an out-of-range alpha as a usage error", "[cli]") {
    const RunResult r =
        run_cli("check-cone --model constant --n 6 --kappa 1 --alpha 0.5 --theta 0");
    CHECK(r.code == 2);
    CHECK(r.contains("alpha"));
}

TEST_CASE("thresholds emits the fixed CSV header and endpoint rows", "[cli]") {
    const RunResult r = run_cli("thresholds --n 4 --grid 3");
    REQUIRE(r.code == 0);
    CHECK(r.contains("n,N,alpha,theta,alpha_max,regime"));
    CHECK(r.contains("4,9,1,2.42857142857,2.7,low"));
    CHECK(r.contains("4,9,2.7,0,2.7,low"));
}

TEST_CASE("thresholds covers the high-dimensional regime", "[cli]") {
    const RunResult r = run_cli("thresholds --n 6 --grid 2");
    REQUIRE(r.code == 0);
    CHECK(r.contains("high"));
    CHECK(r.contains("1.59090909091"));

    const RunResult r5 = run_cli("thresholds --n 5 --grid 2");
    REQUIRE(r5.code == 0);
    CHECK(r5.contains("5,14,3.04347826087,0,3.04347826087,low"));
}

TEST_CASE("thresholds rejects dimensions below four", "[cli]") {
    const RunResult r = run_cli("thresholds --n 3 --grid 4");
    CHECK(r.code == 2);
}

TEST_CASE("verify identities suite is clean at the default constants", "[cli]") {
    const RunResult r = run_cli("verify --suite identities --n 6 --count 100 --seed 1");
    CHECK(r.code == 0);
    CHECK(r.contains("violations=0"));
}

TEST_CASE("verify identities suite flags a perturbed constant", "[cli]") {
    const RunResult r =
        run_cli("verify --suite identities --n 6 --count 100 --seed 1 --perturb 1e-3");
    CHECK(r.code == 1);
    CHECK(!r.contains("violations=0"));
}

TEST_CASE("verify oracle suite passes on the default grid", "[cli]") {
    const std::string summary = (scratch_dir() / "oracles.json").string();
    const RunResult r =
        run_cli("verify --suite oracles --grid default --output " + summary);
    CHECK(r.code == 0);
    REQUIRE(fs::exists(summary));

    std::ifstream in(summary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string body = buf.str();
    CHECK(body.find("\"suites\"") != std::string::npos);
    CHECK(body.find("\"violations\"") != std::string::npos);
    CHECK(body.find("\"worst_slack\"") != std::string::npos);
}

TEST_CASE("verify rejects an unknown suite name", "[cli]") {
    const RunResult r = run_cli("verify --suite spectra");
    CHECK(r.code == 2);
}

TEST_CASE("minimize agrees with the closed forms inside the admissible range", "[cli]") {
    const RunResult r = run_cli("minimize --n 6 --alpha 1 --seed 5");
    CHECK(r.code == 0);
    CHECK(r.contains("F_min = "));
    CHECK(r.contains("lp_min_lambda1 = "));

    const RunResult r4 = run_cli("minimize --n 4 --alpha 2 --seed 5");
    CHECK(r4.code == 0);
}

TEST_CASE("minimize refuses alpha beyond the rigidity range", "[cli]") {
    const RunResult r = run_cli("minimize --n 4 --alpha 3.0");
    CHECK(r.code == 2);
    CHECK(r.contains("admissible range"));
    CHECK(r.contains("2.7"));
}

TEST_CASE("model requires an output path", "[cli]") {
    const RunResult r = run_cli("model --model constant --n 4 --kappa 1");
    CHECK(r.code == 2);
}

TEST_CASE("model writes a tensor file that spectrum reads back", "[cli]") {
    const std::string path = (scratch_dir() / "prod.json").string();
    const RunResult m = run_cli(
        "model --model sphere_product --p 2 --q 2 --kappa1 1 --kappa2 1 --output " + path);
    REQUIRE(m.code == 0);
    CHECK(m.contains("scal = 4"));

    const RunResult s = run_cli("spectrum --input " + path);
    CHECK(s.code == 0);
    CHECK(s.contains("lambda_min = -1"));
    CHECK(s.contains("lambda_max = 1"));
}

TEST_CASE("usage errors exit with the input-error code", "[cli]") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("thresholds").code == 2);
    CHECK(run_cli("spectrum").code == 2);
    CHECK(run_cli("check-cone --model constant --n 6").code == 2);
}
