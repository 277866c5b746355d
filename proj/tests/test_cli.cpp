#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"

namespace classprod::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliEta, Examples) {
  auto r = run_cli({"eta", "--n", "5", "--lhs", "2,1,1,1", "--rhs", "5"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("eta: 2"), std::string::npos);
  EXPECT_NE(r.out.find("4,1"), std::string::npos);
  EXPECT_NE(r.out.find("3,2"), std::string::npos);

  r = run_cli({"eta", "--n", "6", "--lhs", "2,1,1,1,1", "--rhs", "2,1,1,1,1", "--format", "json"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("eta"), 3);

  r = run_cli({"eta", "--n", "6", "--lhs", "1,1,1,1,1,1", "--rhs", "3,2,1"});
  EXPECT_NE(r.out.find("eta: 1"), std::string::npos);
}

TEST(CliEta, Errors) {
  EXPECT_EQ(run_cli({"eta", "--n", "5", "--lhs", "2,x", "--rhs", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"eta", "--n", "5", "--lhs", "2,1", "--rhs", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"eta", "--n", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"eta", "--n", "13", "--lhs", "13", "--rhs", "13", "--engine", "brute"}).code, kResource);
  EXPECT_EQ(run_cli({"eta", "--n", "40", "--lhs", "40", "--rhs", "40"}).code, kResource);
}

TEST(CliTable, Examples) {
  auto r = run_cli({"table", "--n", "6", "--format", "csv"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(count_lines(r.out), 101u);  // header + (p(6) - 1)^2
  EXPECT_EQ(r.out.rfind("n,lhs,rhs,eta,components\n", 0), 0u);

  r = run_cli({"table", "--n", "4"});
  EXPECT_NE(r.out.find("4,\"3,1\",\"2,2\",1,"), std::string::npos) << r.out;

  r = run_cli({"table", "--n", "2", "--format", "json"});
  const auto rows = nlohmann::json::parse(r.out).at("rows");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("lhs"), "2");
  EXPECT_EQ(rows[0].at("eta"), 1);
}

TEST(CliTable, CacheAndOutputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "classprod_cli_test";
  std::filesystem::remove_all(dir);
  const auto out_file = (dir / "t.csv").string();
  std::filesystem::create_directories(dir);
  const auto first = run_cli({"table", "--n", "5", "--cache-dir", (dir / "cache").string(), "--output", out_file});
  ASSERT_EQ(first.code, kSuccess) << first.err;
  std::ifstream f(out_file);
  const std::string written((std::istreambuf_iterator<char>(f)), {});
  const auto second = run_cli({"table", "--n", "5", "--cache-dir", (dir / "cache").string()});
  EXPECT_EQ(second.out, written);
  EXPECT_FALSE(std::filesystem::is_empty(dir / "cache"));
  std::filesystem::remove_all(dir);

  EXPECT_EQ(run_cli({"table", "--n", "4", "--output", "/nonexistent/dir/x.csv"}).code, kIo);
}

TEST(CliVerify, Examples) {
  EXPECT_EQ(run_cli({"verify", "--statement", "corollary_b", "--from", "6", "--to", "9"}).code, kSuccess);
  EXPECT_EQ(run_cli({"verify", "--statement", "arad_herzog", "--from", "6", "--to", "8"}).code, kSuccess);
  const auto r = run_cli({"verify", "--statement", "arad_herzog", "--from", "4", "--to", "4"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("3,1"), std::string::npos);
  EXPECT_NE(r.out.find("2,2"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--statement", "nope", "--from", "6", "--to", "6"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "--from", "7", "--to", "6"}).code, kUsage);
}

TEST(CliVerify, OutputIsReproducible) {
  const std::vector<std::string> args{"verify", "--statement", "constructions", "--from", "7", "--to", "7",
                                      "--seed", "5", "--trials", "20", "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(CliConstruct, Examples) {
  auto r = run_cli({"construct", "--lemma", "12", "--n", "7", "--alpha", "(1 2 3)(4 5 6 7)", "--beta", "(1 2)",
                    "--format", "json"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("fixed_points").size(), 1u);

  r = run_cli({"construct", "--lemma", "12", "--n", "6", "--alpha", "(1 2 3)(4 5 6)", "--beta", "(1 2)(3 4)(5 6)"});
  EXPECT_EQ(r.code, kImpossible);
  EXPECT_NE(r.err.find("14"), std::string::npos);

  r = run_cli({"construct", "--lemma", "11", "--n", "4", "--alpha", "(1 2)", "--beta", "(1 2)"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("product: e"), std::string::npos);

  EXPECT_EQ(run_cli({"construct", "--lemma", "6", "--n", "5", "--alpha", "(1 2 3)", "--beta", "(1 2)"}).code,
            kUsage);
  EXPECT_EQ(run_cli({"construct", "--lemma", "7", "--n", "6", "--m", "4", "--alpha", "(1 2)(3 4)", "--beta",
                     "(1 2)"}).code,
            kSuccess);
  EXPECT_EQ(run_cli({"construct", "--lemma", "3", "--n", "5", "--alpha", "(1 2)", "--beta", "(1 2)"}).code, kUsage);
}

TEST(CliChartable, SmallDegree) {
  const auto r = run_cli({"chartable", "--n", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("\"2,1\",-1,0,2"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace classprod::cli
