#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace bootperc::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bootperc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    p3_ = write("p3.el", "3 2\n0 1\n1 2\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
  std::string p3_;
};

TEST_F(CliTest, Degeneracy) {
  Result r = call({"degeneracy", "--graph", p3_});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"d\":1,\"order\":[2,1,0]}\n");
}

TEST_F(CliTest, Simulate) {
  Result r = call({"simulate", "--graph", p3_, "--a0", "0,2", "--r", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\"r\":2,\"a0\":[0,2],\"rounds\":[[1]],\"tau\":1,\"af_size\":3}\n");
}

TEST_F(CliTest, GlobalFlagsBeforeSubcommand) {
  Result r = call({"--graph", p3_, "--json-indent", "2", "simulate", "--a0", "0,2", "--r", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["tau"], 1);
  EXPECT_NE(r.out.find("\n  \"r\": 2"), std::string::npos);
}

TEST_F(CliTest, SampledSeedsAreReproducible) {
  const std::string g = write("g.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  Result a = call({"simulate", "--graph", g, "--a0-size", "3", "--r", "2", "--seed", "5"});
  Result b = call({"simulate", "--graph", g, "--a0-size", "3", "--r", "2", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["a0"].size(), 3u);
  Result c = call({"simulate", "--graph", g, "--a0-bernoulli", "1", "--r", "2"});
  EXPECT_EQ(c.json()["af_size"], 6);
}

TEST_F(CliTest, A0FromFile) {
  const std::string f = write("a0.txt", "# seeds\n0\n2\n");
  Result r = call({"simulate", "--graph", p3_, "--a0-file", f, "--r", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["af_size"], 3);
}

TEST_F(CliTest, Potential) {
  Result r = call({"potential", "--graph", p3_, "--a0", "0,2", "--r", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"psi\":[1,0],\"min_drop\":1,\"claim_holds\":true,\"d\":1,\"r\":2}\n");
  Result na = call({"potential", "--graph", p3_, "--a0", "0", "--r", "1"});
  EXPECT_EQ(na.code, 0);
  EXPECT_TRUE(na.json()["claim_holds"].is_null());
}

TEST_F(CliTest, Extremal) {
  const std::string out = (dir_ / "ext.el").string();
  Result r = call({"extremal", "--d", "1", "--r", "2", "--k", "1", "--out", out});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["edge_list"], "3 2\n0 1\n1 2");
  EXPECT_EQ(j["a0"], nlohmann::json::array({0, 2}));
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "3 2\n0 1\n1 2\n");
}

TEST_F(CliTest, ExtremalRejectsDegenerateParameters) {
  Result r = call({"extremal", "--d", "1", "--r", "1", "--k", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("r > d"), std::string::npos);
}

TEST_F(CliTest, CheckBounds) {
  Result r = call({"check-bounds", "--graph", p3_, "--a0", "0,2", "--r", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\"d\":1,\"r\":2,\"a0_size\":2,\"af_size\":3,\"tau\":1,"
            "\"theorem\":\"holds\",\"runtime_corollary\":\"holds\","
            "\"bound_numerator\":4,\"bound_denominator\":1}\n");
  const std::string k4 = write("k4.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  Result na = call({"check-bounds", "--graph", k4, "--a0", "0,1", "--r", "2"});
  EXPECT_EQ(na.code, 0);
  EXPECT_EQ(na.json()["theorem"], "not_applicable");
  EXPECT_EQ(na.json()["af_size"], 4);
}

TEST_F(CliTest, MinPerc) {
  Result r = call({"minperc", "--graph", p3_, "--r", "2", "--enumerate"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["smallest_size"], 2);
  EXPECT_EQ(j["witness"], nlohmann::json::array({0, 2}));
  EXPECT_EQ(j["minimal_sets"], nlohmann::json::parse("[[0,2]]"));
  EXPECT_EQ(j["riedl_bounds_hold"], true);
  EXPECT_EQ(j["riedl_lower"]["num"], 2);
}

TEST_F(CliTest, MinPercBudget) {
  Result gen = call({"gen", "complete", "--n", "12", "--out", (dir_ / "k12.el").string()});
  ASSERT_EQ(gen.code, 0);
  Result r = call({"minperc", "--graph", (dir_ / "k12.el").string(), "--r", "2", "--budget", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST_F(CliTest, Gen) {
  Result r = call({"gen", "star", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["edge_list"], "4 3\n0 1\n0 2\n0 3");
  Result a = call({"gen", "gnp", "--n", "30", "--p", "0.2", "--seed", "9"});
  Result b = call({"gen", "gnp", "--n", "30", "--p", "0.2", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(call({"gen", "hypercube", "--n", "4"}).code, 2);
  EXPECT_EQ(call({"gen", "cycle", "--n", "2"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"simulate", "--graph", p3_, "--r", "2"}).code, 2);  // no A_0
  EXPECT_EQ(call({"simulate", "--graph", p3_, "--a0", "0", "--a0-size", "1", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"simulate", "--graph", p3_, "--a0", "0,7", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"simulate", "--graph", p3_, "--a0", "x", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"simulate", "--a0", "0", "--r", "2"}).code, 2);  // no graph
  EXPECT_EQ(call({"degeneracy", "--graph", (dir_ / "missing.el").string()}).code, 2);
  const std::string bad = write("bad.el", "2 1\n0 0\n");
  Result r = call({"degeneracy", "--graph", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, CorpusCheckSmoke) {
  Result r = call({"corpus-check", "--seed", "3", "--threads", "2", "--minperc-budget", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["ok"], true);
  EXPECT_GE(j["graphs"].get<int>(), 500);
  EXPECT_EQ(j["theorem_violations"], 0);
}

}  // namespace
}  // namespace bootperc::cli
