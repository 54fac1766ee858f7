#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zetadiv/cli.hpp"

using namespace zetadiv;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "zetadiv_test_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kHyperbola = R"({"p": 3, "e": 1, "ambient": "affine", "n": 2,
                             "polys": ["x1*x2 - 1"]})";
const char* kHyperplaneP2 = R"({"p": 3, "e": 1, "ambient": "projective", "n": 2,
                                "polys": ["x0"], "budget": 1000000000})";

} // namespace

TEST_CASE("mu table matches the formula") {
    auto r = run_cli({"mu", "--n", "5", "--degrees", "1,1", "--jmax", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "mu_0 = 3\nmu_1 = 3\nmu_2 = 3\n");
}

TEST_CASE("mu table as JSON round-trips") {
    auto r = run_cli({"--format", "json", "mu", "--n", "5", "--degrees", "1,1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["check"] == "mu");
    CHECK(j["rows"][0]["mu"] == 3);
}

TEST_CASE("count subcommand") {
    TempFile file(kHyperbola);
    auto r = run_cli({"count", file.path, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8") != std::string::npos);
    auto rc = run_cli({"--format", "json", "count", file.path, "--k", "2",
                       "--complement"});
    CHECK(rc.code == 0);
    json j = json::parse(rc.out);
    CHECK(j["count"] == "73");   // 81 - 8
}

TEST_CASE("zeta subcommand, text and JSON agree") {
    TempFile file(kHyperbola);
    auto r = run_cli({"zeta", file.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1 - T)/(1 - 3*T)") != std::string::npos);
    auto rj = run_cli({"--format", "json", "zeta", file.path});
    json j = json::parse(rj.out);
    CHECK(j["q"] == 3);
    CHECK(j["num"] == json::array({1, -1}));
    CHECK(j["den"] == json::array({1, -3}));
}

TEST_CASE("zeta --holdout and --bound flags are honored") {
    TempFile file(kHyperbola);
    auto strict = run_cli({"--format", "json", "zeta", file.path});
    auto loose = run_cli({"--format", "json", "zeta", file.path, "--holdout", "1"});
    CHECK(strict.code == 0);
    CHECK(loose.code == 0);
    CHECK(json::parse(strict.out) == json::parse(loose.out));
    // holdout 0 means no certificate at all: the minimal fit consistent with
    // a single count is geometric, and that is what the knob promises
    auto none = run_cli({"--format", "json", "zeta", file.path, "--holdout", "0"});
    CHECK(none.code == 0);
    CHECK(json::parse(none.out)["den"] == json::array({1, -2}));
    // a bound of 0 admits only constants; the hyperbola cannot stabilize
    auto capped = run_cli({"zeta", file.path, "--bound", "0"});
    CHECK(capped.code == 3);
}

TEST_CASE("verify excision exits 0 on a theorem-true case") {
    TempFile file(kHyperbola);
    auto r = run_cli({"verify", "excision", file.path, "--kmax", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("verify ax-katz and projective verdicts agree across formats") {
    TempFile file(kHyperplaneP2);
    auto text = run_cli({"verify", "projective", file.path});
    auto js = run_cli({"--format", "json", "verify", "projective", file.path});
    CHECK(text.code == 0);
    CHECK(js.code == 0);
    json j = json::parse(js.out);
    CHECK(j["overall"] == "pass");
    CHECK(j["complement"]["rows"][0]["tight"] == true);

    TempFile aff(kHyperbola);
    auto ax = run_cli({"verify", "ax-katz", aff.path, "--kmax", "2"});
    CHECK(ax.code == 0);
}

TEST_CASE("probe exits 0 and carries the disclaimer") {
    TempFile file(kHyperbola);
    auto r = run_cli({"--format", "json", "probe", "affine", file.path});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["check"] == "open-question-probe");
    CHECK(j["any_violation"] == false);
    CHECK(j["disclaimer"].get<std::string>().find("cannot distinguish") !=
          std::string::npos);
}

TEST_CASE("malformed polynomial exits 2 with a position") {
    TempFile file(R"({"p": 3, "e": 1, "ambient": "affine", "n": 2,
                      "polys": ["x1 + + x2"]})");
    auto r = run_cli({"count", file.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("missing file and missing fields exit 2") {
    auto r = run_cli({"count", "does_not_exist.json"});
    CHECK(r.code == 2);
    TempFile file(R"({"p": 3, "ambient": "affine", "n": 2, "polys": ["x1"]})");
    auto r2 = run_cli({"count", file.path});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("\"e\"") != std::string::npos);
}

TEST_CASE("a failed verification exits 1") {
    // misreporting the hyperplane's dimension as 0 turns the weight-2 pole of
    // Z(P^1) into a baseline violation on the variety side
    TempFile file(R"({"p": 3, "e": 1, "ambient": "projective", "n": 2,
                      "polys": ["x0"], "dim": 0, "budget": 1000000000})");
    auto r = run_cli({"verify", "projective", file.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("fail") != std::string::npos);
    auto rj = run_cli({"--format", "json", "verify", "projective", file.path});
    CHECK(rj.code == 1);
    CHECK(json::parse(rj.out)["overall"] == "fail");
}

TEST_CASE("budget starvation exits 3") {
    TempFile file(R"({"p": 5, "e": 1, "ambient": "affine", "n": 3,
                      "polys": ["x1*x2*x3 - 1"], "budget": 10})");
    auto r = run_cli({"zeta", file.path});
    CHECK(r.code == 3);
}

TEST_CASE("usage errors exit 2") {
    auto r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    auto r2 = run_cli({"mu"});
    CHECK(r2.code == 2);
    auto r3 = run_cli({});
    CHECK(r3.code == 2);
}

TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("zeta") != std::string::npos);
}
