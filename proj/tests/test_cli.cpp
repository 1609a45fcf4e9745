#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "warp_lis/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "warp-lis");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = warp_lis::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("warp_lis_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, Dtw) {
  const auto a = file("a.csv", "0\n1\n");
  const auto b = file("b.csv", "1,1\n");
  const auto r = run({"dtw", "--a", a, "--b", b, "--diss", "abs"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"distance\":1,\"path\":[[1,1],[2,2]]}\n");
}

TEST_F(CliTest, Reduce) {
  const auto a = file("a.json", "[0, 1]");
  const auto b = file("b.csv", "1,1");
  const auto r = run({"reduce", "--a", a, "--b", b, "--diss", "abs"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"S\":[2,1,3],\"W\":3,\"Gl\":[1,2],\"Gr\":[0,3],\"Hl\":[1,3],\"Hr\":[1,3]}\n");
}

TEST_F(CliTest, IndexBuildAndQuery) {
  const auto a = file("a.csv", "0,1");
  const auto b = file("b.csv", "1,1");
  const auto idx = (dir_ / "i.json").string();
  ASSERT_EQ(run({"index", "build", "--a", a, "--b", b, "--diss", "abs", "--out", idx}).code, 0);
  EXPECT_EQ(run({"index", "query", "--idx", idx, "--shape", "sub-a", "--i1", "1", "--i2", "2"}).out,
            "{\"distance\":1,\"fallback\":false}\n");
  EXPECT_EQ(run({"index", "query", "--idx", idx, "--shape", "suf-pre", "--i1", "2", "--j2", "2"}).out,
            "{\"distance\":0,\"fallback\":false}\n");
  EXPECT_EQ(run({"index", "query", "--idx", idx, "--shape", "pre-suf", "--i2", "1"}).code, 2);
  EXPECT_EQ(run({"index", "query", "--idx", idx, "--shape", "sub-a", "--i1", "2", "--i2", "3"}).code, 3);
}

TEST_F(CliTest, Solvers) {
  const auto a = file("a.csv", "0,0,1");
  const auto b = file("b.csv", "1,0,0");
  EXPECT_EQ(run({"circular", "--a", a, "--b", b}).out, "{\"distance\":0,\"shift\":3}\n");
  const auto s = file("s.csv", "0,1,0,1");
  EXPECT_EQ(run({"sqrt", "--a", s}).out, "{\"distance\":0,\"split\":2}\n");
  const auto p = file("p.csv", "0,1");
  EXPECT_EQ(run({"periodic", "--a", p, "--b", s}).out,
            "{\"cost\":0,\"ell\":1,\"cuts\":[2],\"i_first\":1,\"i_last\":2}\n");
}

TEST_F(CliTest, MatrixDissimilarity) {
  const auto a = file("a.csv", "0,0");
  const auto b = file("b.csv", "0");
  const auto m = file("m.json", "[[2],[3]]");
  EXPECT_EQ(run({"dtw", "--a", a, "--b", b, "--diss", "matrix:" + m}).out,
            "{\"distance\":5,\"path\":[[1,1],[2,1]]}\n");
  const auto bad = file("bad.json", "[[2]]");
  const auto r = run({"dtw", "--a", a, "--b", b, "--diss", "matrix:" + bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("matrix-dimension-mismatch"), std::string::npos);
}

TEST_F(CliTest, SelftestIsDeterministic) {
  const auto first = run({"selftest", "--max-len", "6", "--trials", "40", "--seed", "7"});
  const auto second = run({"selftest", "--max-len", "6", "--trials", "40", "--seed", "7"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("\"passed\":true"), std::string::npos);
}

TEST_F(CliTest, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dtw", "--a", "missing.csv", "--b", "missing.csv"}).code, 3);
  const auto bad = file("bad.csv", "1,x");
  const auto r = run({"dtw", "--a", bad, "--b", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("\"code\":\"malformed-number\""), std::string::npos);
  const auto a = file("a.csv", "1");
  EXPECT_EQ(run({"dtw", "--a", a, "--b", a, "--diss", "cosine"}).code, 2);
  EXPECT_EQ(run({"sqrt", "--a", a}).code, 3);
}

TEST_F(CliTest, Bench) {
  const auto r = run({"bench", "--n", "10,20", "--queries", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"runs\""), std::string::npos);
}
