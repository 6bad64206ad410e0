#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multisect/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = multisect::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify subcommand json output and exit code") {
    auto r = run({"verify", "--id", "E9.h1a", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(r.out.find("\"id\": \"E9.h1a\"") != std::string::npos);
}

TEST_CASE("unknown id exits 2 with a diagnostic") {
    auto r = run({"verify", "--id", "NO.SUCH.ID"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown case id") != std::string::npos);
}

TEST_CASE("unknown flag exits 2") {
    auto r = run({"verify", "--id", "E9.h1a", "--frobnicate"});
    CHECK(r.code == 2);
}

TEST_CASE("out-of-range parameter exits 2") {
    auto r = run({"verify", "--id", "E1.sinh-product", "--param", "x=99"});
    CHECK(r.code == 2);
}

TEST_CASE("census text output matches the listed multiset") {
    auto r = run({"census", "--base", "2", "--limit", "16", "--set", "D"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2:1, 4:2, 6:1, 8:3, 10:1, 12:2, 14:1, 16:4") != std::string::npos);
}

TEST_CASE("verify-all family filter") {
    auto r = run({"verify-all", "--filter", "D"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite: PASS") != std::string::npos);
}

TEST_CASE("sweep over the q grid") {
    auto r = run({"sweep", "--id", "A2.q-case-numeric", "--param", "q=-1,0,0.5,1,2"});
    CHECK(r.code == 0);
}

TEST_CASE("structural subcommand runs the exact oracles") {
    auto r = run({"structural", "--id", "A1.general-2j", "--param", "N=1024"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("deliberately failing case exits 1") {
    auto r = run({"verify", "--id", "Z1.negative-control-structural"});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
    CHECK(r.out.find("first_mismatch=2") != std::string::npos);
}

TEST_CASE("json output is byte-identical across invocations") {
    auto a = run({"verify-all", "--filter", "B", "--format", "json"});
    auto b = run({"verify-all", "--filter", "B", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("tolerance override forces a failure and exit 1") {
    auto r = run({"verify", "--id", "E9.ls3b", "--tol", "1e-30"});
    CHECK(r.code == 1);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "cli_test_report.json";
    auto r = run({"verify", "--id", "B9.teixeira", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"pass\": true") != std::string::npos);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("csv output has a header row") {
    auto r = run({"verify-all", "--filter", "C", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("id,params,lhs,rhs", 0) == 0);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
