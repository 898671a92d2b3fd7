#pragma once

// Reproduction of the published eigenvalue table and the degree-gap series,
// the closed-form vs brute-force oracle sweep, and their CSV/JSON reports.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "antisym/combinatorics.hpp"
#include "antisym/real.hpp"

namespace antisym {

struct TableEntry {
  int d = 0;
  int N = 0;
  BigInt computed;
  BigInt published;
  [[nodiscard]] bool match() const { return computed == published; }
};

struct EigenvalueTable {
  std::vector<TableEntry> rows;  // d-major, then N
  [[nodiscard]] bool all_match() const;
  [[nodiscard]] std::vector<TableEntry> mismatches() const;
};

inline constexpr int kTableMinD = 1, kTableMaxD = 6;
inline constexpr int kTableMinN = 2, kTableMaxN = 9;

/// Published minimal eigenvalue for d in [1,6], N in [2,9].
std::int64_t published_lambda(int d, int N);

EigenvalueTable reproduce_table();

struct GapPoint {
  std::int64_t N = 0;
  BigInt degree;
  hp::Real xi;
  hp::Real gap;
  hp::Real bound;
  bool is_cusp = false;
};

struct GapSeries {
  int d = 0;
  std::vector<GapPoint> points;  // N = 2..n_max
  std::vector<std::int64_t> cusps;
};

/// A cusp is an N where the forward increment of V_d exceeds the backward one.
bool is_cusp(int d, std::int64_t N);

/// Per-N cells run on OpenMP workers, each at the requested precision.
GapSeries gap_series(int d, std::int64_t n_max, int digits = hp::kInherit);

struct OracleCheck {
  int d = 0;
  int N = 0;
  BigInt expected_degree;
  bool skipped = false;   // outside the oracle budget
  std::string note;
  std::optional<std::int64_t> degree_found;
  std::uint64_t space_dimension = 0;
  bool witness_verified = false;
  bool psi_checked = false;
  bool psi_antisymmetric = false;
  bool psi_homogeneous = false;  // single component of degree expected_degree
  bool psi_harmonic = false;

  [[nodiscard]] bool passed() const;
};

struct OracleSweepReport {
  std::vector<OracleCheck> checks;  // sorted by (d*N, d)
  [[nodiscard]] bool all_passed() const;
};

/// Every (d, N) with N >= 2 and d*N <= max_dn. Cells whose monomial space
/// exceeds `oracle_budget` are reported as skipped.
OracleSweepReport oracle_sweep(int max_dn, std::uint64_t oracle_budget);

/// Checks one cell; exposed for the acceptance suite.
OracleCheck oracle_check(int d, int N, std::uint64_t oracle_budget);

enum class Format { csv, json, text };

/// Throws std::invalid_argument on anything but "csv", "json", "text".
Format parse_format(const std::string& s);

/// Columns d,N,lambda_computed,lambda_paper,match.
void write_table(std::ostream& os, const EigenvalueTable& t, Format f);
/// Columns d,N,V,xi,gap,bound,is_cusp; floats at 17 significant digits.
void write_gap_series(std::ostream& os, const std::vector<GapSeries>& series, Format f);
void write_oracle_report(std::ostream& os, const OracleSweepReport& r, Format f);

}  // namespace antisym
