#include "commands.hpp"
#include "json_io.hpp"

#include "flagcalc/random.hpp"
#include "flagcalc/ruled.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using flagcalc::io::json;
using oracle::gr;

namespace {

struct Result {
    int code;
    std::string text;
    json body() const { return json::parse(text); }
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    const int code = flagcalc::cli::run(args, out);
    return {code, out.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("flagcalc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const json& j) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << j.dump();
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string& p) {
        std::ifstream f(p);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    json veronese_forms() const {
        return {{"forms",
                 {{{"degree", 2}, {"coeffs", {1, 0, 0}}},
                  {{"degree", 2}, {"coeffs", {0, 1, 0}}},
                  {{"degree", 2}, {"coeffs", {0, 0, 1}}}}}};
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BoundExample) {
    const auto r = run({"bound", "--a", "3", "--b", "3"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["conic_bound"], "1008/25");
    EXPECT_EQ(r.body()["conic_bound_floor"], 40);
    EXPECT_EQ(r.body()["ruling_curve_bound"], "189/4");
}

TEST_F(CliTest, ChowExample) {
    const auto r = run({"chow", "--classes", "H1,H2,H1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.body()["value"], 1);
}

TEST_F(CliTest, ChernAndH0) {
    const auto c = run({"chern", "--a", "3", "--b", "3"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.body()["c2"], 90);
    EXPECT_EQ(c.body()["euler_characteristic"], 9);
    EXPECT_EQ(run({"h0", "--a", "2", "--b", "2"}).body()["h0"], 27);
    EXPECT_EQ(run({"h0", "--a", "2", "--b", "3", "--side", "X"}).body()["h0"], 18);
    EXPECT_EQ(run({"h0", "--a", "2", "--b", "3", "--side", "Y"}).body()["h0"], 15);
}

TEST_F(CliTest, CheckConicOnRuledSurface) {
    const auto ruled = run({"mk-ruled", "--forms", write("forms.json", veronese_forms())});
    ASSERT_EQ(ruled.code, 0) << ruled.text;
    const json body = ruled.body();
    EXPECT_TRUE(body["j_invariant"]);
    EXPECT_TRUE(body["certificate"]["passed"]);
    EXPECT_EQ(body["irreducibility"], "unverified");
    const json conic = {{"q", {1, 1, 1}}, {"m", {1, 1, 1}}};
    const auto r = run({"check-conic", "--surface", write("s.json", body["surface"]), "--conic", write("c.json", conic)});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_TRUE(r.body()["contained"]);
    EXPECT_TRUE(r.body()["twistor_fiber"]);
    EXPECT_TRUE(r.body()["smooth"]);
}

TEST_F(CliTest, CensusOfRuledSurface) {
    const auto ruled = run({"mk-ruled", "--forms", write("forms.json", veronese_forms())});
    const auto r = run({"census", "--surface", write("ruled.json", ruled.body()), "--prime", "5"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["count"], 8);
    EXPECT_EQ(r.body()["label"], "mod-p evidence");
    EXPECT_TRUE(r.body()["max_disjoint"]["exact"]);
}

TEST_F(CliTest, MkSurfaceFromFile) {
    const json conics = {{"conics", {{{"q", {1, 0, 0}}, {"m", {1, 0, 0}}}, {{"q", {0, 1, 0}}, {"m", {0, 1, 0}}}}}};
    const auto r = run({"mk-surface", "--a", "2", "--b", "2", "--conics", write("t.json", conics), "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_EQ(r.body()["dimension"], 17);
    EXPECT_EQ(r.body()["expected_dimension"], 17);
    EXPECT_EQ(r.body()["basis"].size(), 17U);
    const auto member = flagcalc::io::biform_from_json(r.body()["member"]);
    for (const auto& c : flagcalc::io::conics_from_json(conics)) EXPECT_TRUE(flagcalc::contains_conic(member, c));
}

TEST_F(CliTest, DimReport) {
    const auto r = run({"dim-report", "--a", "3", "--b", "3", "--x", "3", "--trials", "2", "--seed", "11"});
    ASSERT_EQ(r.code, 0) << r.text;
    EXPECT_TRUE(r.body()["in_proven_range"]);
    EXPECT_TRUE(r.body()["all_expected"]);
    EXPECT_EQ(r.body()["trials"].size(), 2U);
    EXPECT_EQ(r.body()["trials"][0]["expected"], 64 - 21);
}

TEST_F(CliTest, DeterministicOutputFiles) {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"mk-surface", "--a", "2", "--b", "3", "--random", "2", "--seed", "77"},
             {"dim-report", "--a", "2", "--b", "3", "--x", "1", "--trials", "3", "--seed", "77"}}) {
        auto first = cmd, second = cmd;
        first.insert(first.end(), {"--out", path("one.json")});
        second.insert(second.end(), {"--out", path("two.json")});
        ASSERT_EQ(run(first).code, 0);
        ASSERT_EQ(run(second).code, 0);
        const std::string a = slurp(path("one.json")), b = slurp(path("two.json"));
        EXPECT_FALSE(a.empty());
        EXPECT_EQ(std::hash<std::string>{}(a), std::hash<std::string>{}(b));
        EXPECT_EQ(a, b);
        EXPECT_FALSE(fs::exists(path("one.json.tmp")));
    }
}

TEST_F(CliTest, DifferentSeedsDiffer) {
    const auto a = run({"mk-surface", "--a", "2", "--b", "2", "--random", "1", "--seed", "1"});
    const auto b = run({"mk-surface", "--a", "2", "--b", "2", "--random", "1", "--seed", "2"});
    EXPECT_NE(a.text, b.text);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, flagcalc::cli::usage_error);
    EXPECT_EQ(run({"frobnicate"}).code, flagcalc::cli::usage_error);
    EXPECT_EQ(run({"bound", "--a", "3"}).code, flagcalc::cli::usage_error);
    EXPECT_EQ(run({"h0", "--a", "1", "--b", "1", "--side", "Z"}).code, flagcalc::cli::usage_error);
    const auto refused = run({"bound", "--a", "2", "--b", "5"});
    EXPECT_EQ(refused.code, flagcalc::cli::precondition_violation);
    EXPECT_EQ(refused.body()["code"], "precondition_violation");
    EXPECT_TRUE(refused.body()["message"].is_string());
    EXPECT_EQ(run({"check-conic", "--surface", path("missing.json"), "--conic", path("missing.json")}).code,
              flagcalc::cli::precondition_violation);
    std::ofstream(path("bad.json")) << "{not json";
    EXPECT_EQ(run({"mk-ruled", "--forms", path("bad.json")}).code, flagcalc::cli::precondition_violation);
    EXPECT_EQ(run({"mk-ruled", "--forms", write("wrong.json", json{{"forms", 3}})}).code,
              flagcalc::cli::precondition_violation);
    const json shared = {{"forms",
                          {{{"degree", 2}, {"coeffs", {1, 0, 0}}},
                           {{"degree", 2}, {"coeffs", {0, 1, 0}}},
                           {{"degree", 2}, {"coeffs", {1, 0, 0}}}}}};
    EXPECT_EQ(run({"mk-ruled", "--forms", write("shared.json", shared)}).code, flagcalc::cli::precondition_violation);
    EXPECT_EQ(run({"chow", "--classes", "H1,H3,H1"}).code, flagcalc::cli::precondition_violation);
}

TEST(JsonRoundTrip, Scalars) {
    const flagcalc::GaussianRational big(mpq_class("123456789012345678901234567891/7"), mpq_class(-5, 3));
    const json j = flagcalc::io::to_json(big);
    EXPECT_EQ(j["re"], "123456789012345678901234567891/7");
    EXPECT_EQ(j["im"], "-5/3");
    EXPECT_EQ(flagcalc::io::gaussian_from_json(j), big);
    EXPECT_EQ(flagcalc::io::gaussian_from_json(json(4)), gr(4));
    EXPECT_EQ(flagcalc::io::gaussian_from_json(json("3/6")), oracle::frac(1, 2));
}

TEST(JsonRoundTrip, RandomObjects) {
    flagcalc::Rng rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_conic(rng, 30);
        EXPECT_EQ(flagcalc::io::conic_from_json(json::parse(flagcalc::io::to_json(c).dump())), c);
        const auto f = oracle::random_biform(rng, 1 + trial % 3, trial % 2);
        const json fj = flagcalc::io::to_json(f);
        EXPECT_EQ(flagcalc::io::biform_from_json(json::parse(fj.dump())), f);
        EXPECT_EQ(flagcalc::io::to_json(flagcalc::io::biform_from_json(fj)).dump(), fj.dump());
        const flagcalc::BinaryForm b{rng.gaussian_integer(9), rng.gaussian_integer(9), rng.gaussian_integer(9)};
        EXPECT_EQ(flagcalc::io::binary_form_from_json(flagcalc::io::to_json(b)), b);
    }
}

TEST(JsonRoundTrip, TermsFollowMonomialOrder) {
    flagcalc::Rng rng(1002);
    const json j = flagcalc::io::to_json(oracle::random_biform(rng, 2, 2));
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> keys;
    for (const auto& t : j["terms"]) keys.emplace_back(t["p"].get<std::vector<unsigned>>(), t["l"].get<std::vector<unsigned>>());
    EXPECT_TRUE(std::is_sorted(keys.rbegin(), keys.rend()));
}

TEST(JsonRoundTrip, RuledSurfaceSurvivesCli) {
    const auto spec = flagcalc::twistor_ruled_surface(
        {flagcalc::BinaryForm{1, 0, 0, 0}, flagcalc::BinaryForm{0, 1, 1, 0}, flagcalc::BinaryForm{0, 0, 0, 1}});
    EXPECT_EQ(flagcalc::io::surface_from_json(json{{"surface", flagcalc::io::to_json(spec.surface)}}), spec.surface);
}
