#include <gtest/gtest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "antisym/cli.hpp"

using antisym::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "antisym");
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ANTISYM_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, ParseRange) {
  EXPECT_EQ(antisym::cli::parse_range("4"), (std::pair<long, long>{4, 4}));
  EXPECT_EQ(antisym::cli::parse_range("2..8"), (std::pair<long, long>{2, 8}));
  EXPECT_THROW(antisym::cli::parse_range("8..2"), std::invalid_argument);
  EXPECT_THROW(antisym::cli::parse_range("a..b"), std::invalid_argument);
  EXPECT_THROW(antisym::cli::parse_range(""), std::invalid_argument);
}

TEST(Cli, ConstantsText) {
  const auto r = call({"constants", "--d", "1", "--N", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("V=3"), std::string::npos);
  EXPECT_NE(r.out.find("lambda=12"), std::string::npos);
  EXPECT_NE(r.out.find("H_A=49/4"), std::string::npos);
  EXPECT_NE(r.out.find("S_A=18.08"), std::string::npos);
}

TEST(Cli, ConstantsCsvWithNu) {
  const auto r = call({"--format", "csv", "constants", "--d", "2", "--N", "2..4", "--nu", "0,0.5,1"});
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 9);
  EXPECT_NE(r.out.find("\n2,2,0,1,1,3,1,4,"), std::string::npos);
}

TEST(Cli, ConstantsLambdaForTwoDimensions) {
  const auto r = call({"--format", "json", "constants", "--d", "2", "--N", "2"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["lambda"], 3);
}

TEST(Cli, ConstantsRejectsSingleParticle) {
  const auto r = call({"constants", "--d", "1", "--N", "1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("--N"), std::string::npos);
  EXPECT_NE(r.err.find("N >= 2 required for antisymmetric constants"), std::string::npos);
}

TEST(Cli, ConstantsRejectsBadFlags) {
  EXPECT_EQ(call({"constants", "--d", "x", "--N", "3"}).status, 2);
  EXPECT_EQ(call({"constants", "--d", "1", "--N", "3", "--nu", "2"}).status, 2);
  EXPECT_EQ(call({"constants", "--d", "1"}).status, 2);
  EXPECT_EQ(call({"--precision", "3", "constants", "--d", "1", "--N", "3"}).status, 2);
  EXPECT_EQ(call({"--format", "xml", "table"}).status, 2);
  EXPECT_EQ(call({"bogus"}).status, 2);
  EXPECT_EQ(call({}).status, 2);
}

TEST(Cli, Help) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("positivity"), std::string::npos);
}

TEST(Cli, TableDefault) {
  const auto r = call({"--format", "csv", "table"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 49);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(Cli, TableJsonAndFilter) {
  const auto j = nlohmann::json::parse(call({"--format", "json", "table"}).out);
  EXPECT_EQ(j.size(), 48u);
  const auto f = nlohmann::json::parse(call({"--format", "json", "table", "--d", "3"}).out);
  ASSERT_EQ(f.size(), 8u);
  for (const auto& row : f) EXPECT_EQ(row["d"], 3);
  EXPECT_EQ(call({"table", "--d", "9"}).status, 2);
}

TEST(Cli, PsiTwoParticles) {
  const auto r = call({"psi", "--d", "1", "--N", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x2_1 - x1_1\n");
}

TEST(Cli, PsiCheck) {
  const auto r = call({"psi", "--d", "1", "--N", "3", "--check"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("terms: 6"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), 'P'), 3);  // three PASS lines
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, PsiBudget) {
  const auto r = call({"psi", "--d", "1", "--N", "30"});
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, PsiBudgetFromEnvironment) {
  ::setenv("ANTISYM_BUDGET", "100", 1);
  EXPECT_EQ(call({"psi", "--d", "1", "--N", "5"}).status, 3);
  ::setenv("ANTISYM_BUDGET", "-4", 1);
  EXPECT_EQ(call({"psi", "--d", "1", "--N", "3"}).status, 2);
  ::unsetenv("ANTISYM_BUDGET");
  EXPECT_EQ(call({"psi", "--d", "1", "--N", "5"}).status, 0);
}

TEST(Cli, FigureCsv) {
  const auto r = call({"--format", "csv", "figure", "--d", "2..8", "--N", "2..100"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 7 * 99);
  EXPECT_EQ(r.out.rfind("d,N,V,xi,gap,bound,is_cusp\n", 0), 0u);
  EXPECT_NE(r.out.find("\n2,3,2,1.8989794855663562,0.10102051443364380,"), std::string::npos);
}

TEST(Cli, FigureIsDeterministicAcrossJobCounts) {
  const auto a = call({"--format", "csv", "--jobs", "1", "figure", "--d", "2..4", "--N", "2..60"});
  const auto b = call({"--format", "csv", "--jobs", "3", "figure", "--d", "2..4", "--N", "2..60"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Oracle) {
  const auto r = call({"oracle", "--max-dn", "8"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("all checks agree"), std::string::npos);
  EXPECT_EQ(call({"oracle", "--max-dn", "1"}).status, 2);
}

TEST(Cli, PositivityZero) {
  const auto r = call({"positivity", data("zero.txt"), "--d", "1", "--N", "3", "--nu", "0.5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("verdict: positive"), std::string::npos);
}

TEST(Cli, PositivityJson) {
  const auto r = call({"--format", "json", "positivity", data("box.txt"), "--d", "1", "--N", "3", "--nu", "0.5"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "positive");
  EXPECT_GT(j["margin"].get<double>(), 0);
}

TEST(Cli, PositivityParseError) {
  const auto r = call({"positivity", data("malformed.txt"), "--d", "1", "--N", "3", "--nu", "0.5"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2, column"), std::string::npos);
}

TEST(Cli, PositivityUsageErrors) {
  EXPECT_EQ(call({"positivity", data("missing.txt"), "--d", "1", "--N", "3", "--nu", "0.5"}).status, 2);
  EXPECT_EQ(call({"positivity", data("zero.txt"), "--d", "1", "--N", "3", "--nu", "0"}).status, 2);
  EXPECT_EQ(call({"positivity", data("zero.txt"), "--d", "1", "--N", "2", "--nu", "0.5"}).status, 2);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "antisym_table.csv";
  EXPECT_EQ(call({"--format", "csv", "--output", path, "table"}).status, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "d,N,lambda_computed,lambda_paper,match");
  EXPECT_EQ(call({"--output", "/nonexistent/dir/x.csv", "table"}).status, 2);
}
