#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "antisym/verify.hpp"

using namespace antisym;

TEST(Table, PublishedSpotValues) {
  EXPECT_EQ(published_lambda(1, 9), 1548);
  EXPECT_EQ(published_lambda(6, 2), 11);
  EXPECT_EQ(published_lambda(4, 6), 168);
  EXPECT_THROW(published_lambda(7, 2), std::out_of_range);
}

TEST(Table, ReproducesAllEntries) {
  const auto t = reproduce_table();
  EXPECT_EQ(t.rows.size(), 48u);
  EXPECT_TRUE(t.all_match());
  EXPECT_TRUE(t.mismatches().empty());
  for (const auto& e : t.rows) EXPECT_EQ(e.computed, lambda_min(e.d, e.N));
}

TEST(Table, CsvAndJsonCarryTheSameRows) {
  const auto t = reproduce_table();
  std::ostringstream csv, json;
  write_table(csv, t, Format::csv);
  write_table(json, t, Format::json);
  const auto parsed = nlohmann::json::parse(json.str());
  ASSERT_EQ(parsed.size(), 48u);
  EXPECT_EQ(parsed[0]["d"], 1);
  EXPECT_EQ(parsed[0]["N"], 2);
  EXPECT_EQ(parsed[0]["match"], true);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "d,N,lambda_computed,lambda_paper,match");
  EXPECT_EQ(first, "1,2,1,1,true");
}

TEST(GapSeries, TwoDimensionsAtThree) {
  const auto s = gap_series(2, 10);
  ASSERT_EQ(s.points.front().N, 2);
  const auto& p3 = s.points[1];
  EXPECT_EQ(p3.N, 3);
  EXPECT_EQ(p3.degree, 2);
  const hp::Real expected = hp::Real(5) - hp::Real(2) * hp::sqrt(hp::Real(6));
  EXPECT_LT(hp::abs(p3.gap - expected), hp::Real("1e-40"));
  EXPECT_NEAR(expected.to_double(), 0.10102, 1e-5);
}

TEST(GapSeries, WithinBoundsAndCuspsAtShells) {
  for (int d = 2; d <= 8; ++d) {
    const auto s = gap_series(d, 100);
    ASSERT_EQ(s.points.size(), 99u);
    std::vector<std::int64_t> shells;
    for (int m = 1;; ++m) {
      const auto n = to_int64(filled_count(d, m));
      if (n >= 100) break;  // a cusp needs a successor inside the range
      if (n >= 2) shells.push_back(n);
    }
    EXPECT_EQ(s.cusps, shells) << d;
    for (const auto& p : s.points) {
      const hp::Real tol = hp::Real("1e-9") * hp::max(hp::Real(1), hp::abs(p.xi));
      ASSERT_GE(p.gap, -tol);
      ASSERT_LE(p.gap, p.bound * (hp::Real(1) + hp::Real("1e-9")));
    }
  }
}

TEST(GapSeries, CuspIsForwardSlopeIncrease) {
  EXPECT_TRUE(is_cusp(2, 3));
  EXPECT_TRUE(is_cusp(2, 6));
  EXPECT_FALSE(is_cusp(2, 4));
  EXPECT_TRUE(is_cusp(3, 4));
  EXPECT_THROW(is_cusp(2, 1), std::invalid_argument);
}

TEST(GapSeries, ReportsAreByteIdentical) {
  std::ostringstream a, b;
  write_gap_series(a, {gap_series(4, 60), gap_series(5, 60)}, Format::json);
  write_gap_series(b, {gap_series(4, 60), gap_series(5, 60)}, Format::json);
  EXPECT_EQ(a.str(), b.str());
  const auto parsed = nlohmann::json::parse(a.str());
  EXPECT_EQ(parsed.size(), 118u);
}

TEST(GapSeries, FloatsRoundTrip) {
  std::ostringstream csv;
  write_gap_series(csv, {gap_series(2, 5)}, Format::csv);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "d,N,V,xi,gap,bound,is_cusp");
  // xi_2(2) = (2 sqrt 2 / 3) 2^{3/2} - 2 = 2/3
  EXPECT_EQ(row.substr(0, 26), "2,2,1,0.66666666666666667,");
  EXPECT_EQ(std::stod("0.66666666666666667"), 2.0 / 3.0);
}

TEST(Oracle, CellExamples) {
  const auto c = oracle_check(2, 3, 200000);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.degree_found, 2);
  EXPECT_TRUE(c.witness_verified);
  EXPECT_TRUE(c.psi_harmonic);
  const auto c14 = oracle_check(1, 4, 200000);
  EXPECT_TRUE(c14.psi_checked && c14.psi_harmonic);
}

TEST(Oracle, SweepAgrees) {
  const auto r = oracle_sweep(8, 200000);
  EXPECT_TRUE(r.all_passed());
  int ran = 0;
  for (const auto& c : r.checks) {
    if (c.skipped) continue;
    ++ran;
    ASSERT_TRUE(c.degree_found) << c.d << "," << c.N;
    EXPECT_EQ(BigInt(*c.degree_found), vandermonde_degree(c.d, c.N));
  }
  EXPECT_GE(ran, 7);
}

TEST(Oracle, TinyBudgetSkips) {
  const auto c = oracle_check(1, 5, 10);
  EXPECT_TRUE(c.skipped);
  EXPECT_FALSE(c.passed());
  OracleSweepReport r;
  r.checks.push_back(c);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(c.note.empty());
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}
