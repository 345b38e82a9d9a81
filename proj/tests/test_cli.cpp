#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/function_file.hpp"

namespace nega::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("nega_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, BilinearConstructThenCheck) {
  const auto file = path("b3.json");
  ASSERT_EQ(run_cli({"construct", "--thm8", "--q", "3", "--out", file}).code, kOk);
  const auto r = run_cli({"check", file});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("negabent: yes"), std::string::npos);
  EXPECT_EQ(run_cli({"construct", "--bilinear", "--q", "3"}).out, slurp(file));
}

TEST_F(Cli, ZeroFunctionFailsWithWitness) {
  const auto file = write("z.json", R"({"q":3,"n":1,"values":[0,0,0]})");
  const auto r = run_cli({"check", file});
  EXPECT_EQ(r.code, kVerdictFalse);
  EXPECT_NE(r.out.find("negabent: no"), std::string::npos);
  EXPECT_NE(r.out.find("at u=("), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"check", file, "--json"}).out);
  EXPECT_FALSE(j["negabent"].get<bool>());
  EXPECT_FALSE(j["autocorrelation"]["witness"].is_null());
  EXPECT_FALSE(j["spectrum"]["witness"].is_null());
}

TEST_F(Cli, CheckBackendsAndTolerance) {
  const auto file = path("e.json");
  ASSERT_EQ(run_cli({"construct", "--thm7", "--q", "4", "--n", "2", "--out", file}).code, kOk);
  for (const char* b : {"exact", "float", "both"}) EXPECT_EQ(run_cli({"check", file, "--backend", b}).code, kOk) << b;
  EXPECT_EQ(run_cli({"check", file, "--backend", "fast"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", file, "--tol", "-1"}).code, kUsage);
  EXPECT_EQ(run_cli({"check", file, "--tol", "abc"}).code, kUsage);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"check"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "--thm7", "--q", "3", "--n", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "--q", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "--thm8", "--poly", "x1", "--q", "3", "--n", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "--poly", "x3", "--q", "3", "--n", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"search", "--q", "2", "--n", "1", "--shards", "2", "--shard", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  EXPECT_EQ(run_cli({"check", "--help"}).code, kOk);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"check", path("missing.json")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("a.json", "{\"q\":3")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("b.json", R"({"q":3,"n":1,"values":[0,0]})")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("c.json", R"({"q":3,"n":1,"values":[0,0,"x"]})")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("d.json", R"({"q":1,"n":1,"values":[0]})")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("e.json", R"({"q":3,"n":1,"target":"4","values":[0,0,0]})")}).code, kInput);
  EXPECT_EQ(run_cli({"check", write("f.json", R"([1,2,3])")}).code, kInput);
  // A q-ary file is the wrong kind for check, and vice versa.
  const auto qary = write("g.json", R"({"q":3,"n":1,"target":"q","values":[0,1,2]})");
  EXPECT_EQ(run_cli({"check", qary}).code, kInput);
  EXPECT_EQ(run_cli({"qary-spectrum", write("h.json", R"({"q":3,"n":1,"values":[0,1,2]})")}).code, kInput);
  EXPECT_EQ(run_cli({"search", "--merge", write("bad.txt", "not json\n")}).code, kInput);
}

TEST_F(Cli, InfeasibleSearch) {
  // q=3, n=2 (6^9 candidates) is under the default ceiling; q=4, n=2 (8^16) is not.
  EXPECT_EQ(run_cli({"search", "--q", "4", "--n", "2"}).code, kInfeasible);
  EXPECT_EQ(run_cli({"search", "--q", "3", "--n", "2", "--ceiling", "1000000"}).code, kInfeasible);
  EXPECT_EQ(run_cli({"search", "--q", "9", "--n", "3"}).code, kInfeasible);
  EXPECT_EQ(run_cli({"search", "--q", "2", "--n", "2", "--ceiling", "100"}).code, kInfeasible);
}

TEST_F(Cli, FunctionFileNormalizesOnce) {
  const auto file = write("s.json", R"({ "n": 1, "values": [-1, 7, 2], "q": 3 })");
  const auto first = serialize(load_function_file(file));
  EXPECT_EQ(first, "{\"q\":3,\"n\":1,\"target\":\"2q\",\"values\":[5,1,2]}\n");
  const auto again = write("t.json", first);
  EXPECT_EQ(serialize(load_function_file(again)), first);
  const auto q = write("u.json", R"({"q":3,"n":1,"target":"q","values":[-1,4,2]})");
  EXPECT_EQ(serialize(load_function_file(q)), "{\"q\":3,\"n\":1,\"target\":\"q\",\"values\":[2,1,2]}\n");
}

TEST_F(Cli, NhtTextAndJsonAgree) {
  const auto file = path("b.json");
  ASSERT_EQ(run_cli({"construct", "--thm8", "--q", "3", "--out", file}).code, kOk);
  const auto text = run_cli({"nht", file});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("flat: yes"), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"nht", file, "--json"}).out);
  EXPECT_TRUE(j["flat"].get<bool>());
  ASSERT_EQ(j["points"].size(), 9u);
  for (const auto& p : j["points"]) {
    EXPECT_EQ(p["tsq"].get<int>(), 9);
    EXPECT_DOUBLE_EQ(p["magnitude"].get<double>(), 1.0);
  }
  // Single point: N(1,2) = w^{5*1} = exp(5 pi i / 3), phase -1/3 of pi.
  const auto one = nlohmann::json::parse(run_cli({"nht", file, "--u", "1,2", "--json"}).out);
  ASSERT_EQ(one["points"].size(), 1u);
  EXPECT_NEAR(one["points"][0]["phase_over_pi"].get<double>(), -1.0 / 3, 1e-11);
  const auto negative = nlohmann::json::parse(run_cli({"nht", file, "--u", "-2,-1", "--json"}).out);
  EXPECT_EQ(negative["points"][0]["u"], one["points"][0]["u"]);
  EXPECT_EQ(run_cli({"nht", file, "--u", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"nht", file, "--u", "1,b"}).code, kUsage);
  const auto fl = nlohmann::json::parse(run_cli({"nht", file, "--backend", "float", "--json"}).out);
  EXPECT_TRUE(fl["points"][0]["tsq"].is_null());
  EXPECT_TRUE(fl["flat"].get<bool>());
}

TEST_F(Cli, NacMarksExactZeros) {
  const auto file = path("b.json");
  ASSERT_EQ(run_cli({"construct", "--thm8", "--q", "3", "--out", file}).code, kOk);
  const auto text = run_cli({"nac", file});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("exact zero entries: 8 of 9"), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"nac", file, "--json"}).out);
  EXPECT_EQ(j["zero_entries"].get<int>(), 8);
  EXPECT_FALSE(j["entries"][0]["zero"].get<bool>());
  const auto other = write("z.json", R"({"q":3,"n":2,"values":[0,0,0,0,0,0,0,0,0]})");
  const auto cross = nlohmann::json::parse(run_cli({"nac", file, "--cross", other, "--json"}).out);
  EXPECT_TRUE(cross["cross"].get<bool>());
  EXPECT_EQ(run_cli({"nac", file, "--cross", write("w.json", R"({"q":3,"n":1,"values":[0,0,0]})")}).code, kInput);
}

TEST_F(Cli, ConstructPolyAndDirectSum) {
  const auto a = path("a.json");
  const auto b = path("b.json");
  const auto s = path("s.json");
  ASSERT_EQ(run_cli({"construct", "--poly", "x1^2 - x1", "--q", "4", "--n", "1", "--out", a}).code, kOk);
  ASSERT_EQ(run_cli({"construct", "--even-quadratic", "--q", "4", "--n", "2", "--out", b}).code, kOk);
  ASSERT_EQ(run_cli({"construct", "--direct-sum", a, b, "--out", s}).code, kOk);
  EXPECT_EQ(slurp(s), run_cli({"construct", "--thm7", "--q", "4", "--n", "3"}).out);
  const auto t = path("t.json");
  ASSERT_EQ(run_cli({"construct", "--thm8", "--q", "3", "--out", t}).code, kOk);
  EXPECT_EQ(run_cli({"construct", "--direct-sum", a, t}).code, kInput);
}

TEST_F(Cli, QarySpectrumRatio) {
  const auto file = write("g.json", R"({"q":3,"n":1,"target":"q","values":[0,1,2]})");
  const auto text = run_cli({"qary-spectrum", file});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("max/min ratio: 2\n"), std::string::npos);
  EXPECT_NE(text.out.find("flat: no"), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"qary-spectrum", file, "--json"}).out);
  EXPECT_NEAR(j["ratio"].get<double>(), 2.0, 1e-11);
  EXPECT_FALSE(j["flat"].get<bool>());
}

TEST_F(Cli, Q4Report) {
  const auto file = path("h.json");
  ASSERT_EQ(run_cli({"construct", "--thm7", "--q", "4", "--n", "2", "--out", file}).code, kOk);
  const auto text = run_cli({"q4-report", file});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("(i) everywhere: yes"), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"q4-report", file, "--json"}).out);
  EXPECT_TRUE(j["all_weighted"].get<bool>());
  EXPECT_EQ(j["points"].size(), 4u);
  const auto b = path("b.json");
  ASSERT_EQ(run_cli({"construct", "--thm8", "--q", "3", "--out", b}).code, kOk);
  EXPECT_EQ(run_cli({"q4-report", b}).code, kUsage);
}

TEST_F(Cli, SearchShardsMergeByteIdentical) {
  const auto whole = path("all.txt");
  ASSERT_EQ(run_cli({"search", "--q", "2", "--n", "2", "--out", whole}).code, kOk);
  std::vector<std::string> merge{"search", "--out", path("merged.txt"), "--merge"};
  for (int k = 7; k >= 0; --k) {
    const auto part = path("part" + std::to_string(k) + ".txt");
    ASSERT_EQ(run_cli({"search", "--q", "2", "--n", "2", "--shards", "8", "--shard", std::to_string(k), "--out", part}).code,
              kOk);
    merge.push_back(part);
  }
  ASSERT_EQ(run_cli(merge).code, kOk);
  const auto a = slurp(whole);
  EXPECT_EQ(a, slurp(path("merged.txt")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 256);
  const auto eight = path("eight.txt");
  ASSERT_EQ(run_cli({"search", "--q", "2", "--n", "2", "--shards", "8", "--out", eight}).code, kOk);
  EXPECT_EQ(a, slurp(eight));
  const auto hits = run_cli({"search", "--q", "2", "--n", "2", "--hits-only"});
  EXPECT_EQ(std::count(hits.out.begin(), hits.out.end(), '\n'), 64);
}

TEST_F(Cli, VerifyExamples) {
  const auto r = run_cli({"verify-examples"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"verify-examples", "--json"}).out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_GE(j["rows"].size(), 30u);
  const auto small = nlohmann::json::parse(run_cli({"verify-examples", "--max-points", "50", "--json"}).out);
  EXPECT_TRUE(small["ok"].get<bool>());
}

}  // namespace
}  // namespace nega::cli
