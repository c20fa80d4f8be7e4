#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support.hpp"

using sbtest::run_cmd;
using sbtest::RunResult;

namespace {

std::string q(const std::string& s) { return "\"" + s + "\""; }

std::string cli() { return q(SB_CLI_PATH); }

std::string fix(const std::string& rel) { return q(std::string(SB_FIXTURE_DIR) + "/" + rel); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bound: exact formula with explicit sizes") {
    RunResult r = run_cmd(cli() + " bound --k 1 --d 2 --tau 1 --formula exact");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["bound"]["L"] == "9548");
    CHECK(j["bound"]["provenance"] == "simplex-theorem");
    CHECK(j["inputs"]["formula"] == "exact");
    CHECK_FALSE(j.contains("timings"));
}

TEST_CASE("bound: sizes measured from a polynomial file") {
    RunResult r = run_cmd(cli() + " bound --poly " + fix("quad.json"));
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["inputs"]["k"] == 1);
    CHECK(j["inputs"]["d"] == 2);
    CHECK(j["inputs"]["tau"] == 2);
    CHECK(j["inputs"]["poly"] == "2*x1^2 - 2*x1 + 1");
}

TEST_CASE("bound: univariate variant reports the closed-form minorant") {
    RunResult r = run_cmd(cli() + " bound --k 1 --d 2 --tau 2 --univariate");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["bound"]["L"] == "10");
    CHECK(j["bound"]["conservative"] == "1/1728");
}

TEST_CASE("bound: rejects inconsistent flag combinations") {
    CHECK(run_cmd(cli() + " bound --k 1 --d 2 --tau 1 --formula ls").code == 3);
    CHECK(run_cmd(cli() + " bound --k 2 --d 2 --tau 1 --univariate").code == 3);
    CHECK(run_cmd(cli() + " bound --k 2 --d 2 --tau 1 --univariate --formula compact").code == 3);
    CHECK(run_cmd(cli() + " bound").code == 3);
    CHECK(run_cmd(cli() + " bound --k 1 --d 2 --tau 1 --formula nope").code == 3);
}

TEST_CASE("bound: --out writes the report file, stdout stays quiet") {
    std::string out = "/tmp/sb_cli_bound.json";
    std::remove(out.c_str());
    RunResult r = run_cmd(cli() + " bound --k 1 --d 2 --tau 1 --out " + q(out));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["bound"]["L"] == "9548");
    std::remove(out.c_str());
}

TEST_CASE("certify1d: quadratic, sextic, and a nonpositive line") {
    RunResult quad = run_cmd(cli() + " certify1d --poly " + fix("quad.json"));
    CHECK(quad.code == 0);
    auto j = nlohmann::json::parse(quad.out);
    CHECK(j["certificate"]["minimum"]["rational"] == "1/2");
    CHECK(j["certificate"]["bound"]["L"] == "10");

    RunResult edge = run_cmd(cli() + " certify1d --poly " + fix("edge.json"));
    CHECK(edge.code == 0);
    CHECK(has(edge.out, "31/32"));

    CHECK(run_cmd(cli() + " certify1d --poly " + fix("linear.json")).code == 2);
    // two variables cannot feed the one-variable command
    CHECK(run_cmd(cli() + " certify1d --poly " + fix("berg/berg.json")).code == 3);
    CHECK(run_cmd(cli() + " certify1d").code == 3);
}

TEST_CASE("certify: full run against the shipped parametrization") {
    RunResult r = run_cmd(cli() + " certify --poly " + fix("berg/berg.json") + " --rur-dir " +
                          fix("berg/rur"));
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "complete");
    CHECK(j["minimum"]["rational"] == "31/32");
    CHECK(j["missing"].empty());
    CHECK(j["bound"]["D"] == "132");
    CHECK_FALSE(j.contains("numeric_check"));
}

TEST_CASE("certify: absent parametrization surfaces as incomplete") {
    RunResult r = run_cmd(cli() + " certify --poly " + fix("berg/berg.json"));
    CHECK(r.code == 4);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "incomplete");
    CHECK(j["missing"] == nlohmann::json::array({"0_1_2"}));
    CHECK(j["minimum"]["rational"] == "31/32");
}

TEST_CASE("certify: face filter avoids the interior entirely") {
    RunResult r = run_cmd(cli() + " certify --poly " + fix("berg/berg.json") + " --face 1,2");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "complete");
    CHECK(j["minimum"]["rational"] == "31/32");
    CHECK(j["faces"].size() == 3);

    CHECK(run_cmd(cli() + " certify --poly " + fix("berg/berg.json") + " --face 0,5").code == 3);
    CHECK(run_cmd(cli() + " certify --poly " + fix("berg/berg.json") + " --face ,").code == 3);
}

TEST_CASE("certify: constant and nonpositive inputs") {
    CHECK(run_cmd(cli() + " certify --poly " + fix("const5.json")).code == 0);
    CHECK(run_cmd(cli() + " certify --poly " + fix("linear.json")).code == 2);
}

TEST_CASE("certify: numeric check is opt-in and seeded") {
    std::string base = cli() + " certify --poly " + fix("berg/berg.json") + " --rur-dir " +
                       fix("berg/rur") + " --numeric-check --samples 2000 --refine 50";
    RunResult r = run_cmd(base + " --seed 7");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("numeric_check"));
    CHECK(j["numeric_check"]["samples"] == 2000);
    double v = j["numeric_check"]["value"].get<double>();
    CHECK(v >= 0.96875 - 1e-12);
    CHECK(v <= 0.96875 + 1e-3);

    // the environment override beats the flag; everything but the echoed
    // command line must match the --seed 7 run
    RunResult env = run_cmd("SIMPLEXBOUND_SEED=7 " + base + " --seed 3");
    CHECK(env.code == 0);
    auto je = nlohmann::json::parse(env.out);
    je.erase("command");
    j.erase("command");
    CHECK(je.dump() == j.dump());

    CHECK(run_cmd("SIMPLEXBOUND_SEED=abc " + base).code == 3);
}

TEST_CASE("repeated runs emit identical bytes") {
    std::string cmd = cli() + " certify --poly " + fix("berg/berg.json") + " --rur-dir " +
                      fix("berg/rur") + " --numeric-check --seed 42";
    RunResult a = run_cmd(cmd);
    RunResult b = run_cmd(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cmd(cli() + " bound --k 2 --d 3 --tau 4 --formula compact");
    RunResult d = run_cmd(cli() + " bound --k 2 --d 3 --tau 4 --formula compact");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("compare: one-cell grid with frozen magnitudes") {
    std::string out = "/tmp/sb_cli_compare.csv";
    std::remove(out.c_str());
    RunResult r = run_cmd(cli() + " compare --kmax 1 --dmax 1 --taumax 1 --c 1 --out " + q(out));
    CHECK(r.code == 0);
    CHECK(slurp(out) ==
          "k,d,tau,L_exact,log2_compact,log2_canny,log2_ls\n"
          "1,1,1,436,144.000000,9.169926,8.000000\n");
    std::remove(out.c_str());

    CHECK(run_cmd(cli() + " compare --kmax 1 --dmax 1 --taumax 1 --out /tmp/x.csv").code == 3);
}

TEST_CASE("malformed inputs exit with the input-error code") {
    std::string bad = sbtest::write_temp("/tmp", "sb_cli_bad.json", "{nope");
    CHECK(run_cmd(cli() + " certify1d --poly " + q(bad)).code == 3);
    CHECK(run_cmd(cli() + " certify --poly " + q(bad)).code == 3);
    CHECK(run_cmd(cli() + " bound --poly /tmp/definitely_missing_492.json").code == 3);
    CHECK(run_cmd(cli() + " bogus").code == 3);
    std::remove(bad.c_str());
}
