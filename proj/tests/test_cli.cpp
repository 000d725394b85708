#include <gtest/gtest.h>

#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hypsurf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

hypsurf::io::Json json_of(const std::string& s) { return hypsurf::io::parse_json(s); }

}  // namespace

TEST(Cli, ClassifyTorus) {
    const auto r = run({"classify", R"({"kind":"finite","g":1,"c":0,"b":0,"a":0})"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_FALSE(j["standard"].get<bool>());
    EXPECT_EQ(j["name"], "torus");
    EXPECT_EQ(j["chi"], 0);
}

TEST(Cli, ChiOfPants) {
    const auto r = run({"chi", R"({"kind":"finite","g":0,"c":0,"b":3,"a":0})"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r.out)["chi"], -1);
    const auto csv = run({"--format", "csv", "chi", R"({"kind":"infinite","inf_boundary":false,"inf_chi":true})"});
    EXPECT_EQ(csv.out, "chi\n-inf\n");
}

TEST(Cli, PlanGenusTwo) {
    const auto r = run({"plan", "--sig", "2,0,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j["pants"].size(), 2u);
    EXPECT_EQ(j["gluings"].size(), 3u);
    const auto realized = run({"realize", r.out.substr(0, r.out.size() - 1)});
    ASSERT_EQ(realized.code, 0) << realized.err;
    EXPECT_NEAR(json_of(realized.out)["total_area"].get<double>(), 4 * std::numbers::pi, 1e-12);
}

TEST(Cli, PantsSeams) {
    const auto r = run({"pants", "--lengths", "0,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r.out)["seams"]["d12"], "inf");
}

TEST(Cli, ExitCodesAndErrors) {
    const auto bad = run({"classify", "{not json"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(json_of(bad.err)["error"], "InvalidInput");
    EXPECT_EQ(run({"plan", "--sig", "1,0,0,0"}).code, 2);
    EXPECT_EQ(run({"double", R"({"kind":"finite","g":1,"c":0,"b":0,"a":0})"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--n", "0", "limit-set"}).code, 2);
    EXPECT_EQ(run({"pants", "--lengths", "1,2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EchoConfig) {
    const auto r = run({"--n", "5", "--seed", "17", "--echo-config", "limit-set", "--group", "schottky"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j["max_word_length"], 5);
    EXPECT_EQ(j["rng_seed"], 17);
    EXPECT_EQ(j["group"], "schottky");
}

TEST(Cli, LimitSetCsvAndDeterminism) {
    const auto a = run({"--n", "3", "limit-set"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out.rfind("theta,word\n", 0), 0u);
    EXPECT_EQ(a.out, run({"--n", "3", "limit-set"}).out);
    const auto j = run({"--n", "3", "--format", "json", "limit-set", "--group", "schottky"});
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_EQ(json_of(j.out)["mode"], "axes");
}

TEST(Cli, BoundaryMap) {
    const auto r = run({"--n", "3", "--format", "json", "boundary-map", "--aut", "inner:A", "--check-identity", "--m", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j["order"], "Preserving");
    EXPECT_TRUE(j["identity"]["identity"].get<bool>());
    EXPECT_EQ(j["identity"]["best_inner"], "a");

    const auto x = run({"--n", "4", "--seed", "5", "boundary-map", "--group", "cusped-torus", "--aut", "random"});
    ASSERT_EQ(x.code, 0) << x.err;
    EXPECT_EQ(x.out, run({"--n", "4", "--seed", "5", "boundary-map", "--group", "cusped-torus", "--aut", "random"}).out);
    EXPECT_EQ(run({"boundary-map", "--aut", "A=AA,B=B,C=C,D=D"}).code, 2);
}
