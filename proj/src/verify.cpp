#include "antisym/verify.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "antisym/polyalg.hpp"

namespace antisym {
namespace {

// Minimal Laplace-Beltrami eigenvalues on antisymmetric functions over
// S^{dN-1}, rows d = 1..6, columns N = 2..9, as published.
constexpr std::array<std::array<std::int64_t, 8>, 6> kPublished{{
    {1, 12, 48, 130, 285, 546, 952, 1548},
    {3, 12, 40, 84, 144, 253, 392, 561},
    {5, 18, 39, 90, 161, 252, 363, 494},
    {7, 24, 51, 88, 168, 272, 400, 552},
    {9, 30, 63, 108, 165, 280, 423, 594},
    {11, 36, 75, 128, 195, 276, 432, 620},
}};

const char* json_bool(bool b) { return b ? "true" : "false"; }
const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::int64_t published_lambda(int d, int N) {
  if (d < kTableMinD || d > kTableMaxD || N < kTableMinN || N > kTableMaxN)
    throw std::out_of_range("no published eigenvalue for d=" + std::to_string(d) + ", N=" + std::to_string(N));
  return kPublished[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(N - 2)];
}

bool EigenvalueTable::all_match() const {
  for (const auto& r : rows)
    if (!r.match()) return false;
  return true;
}

std::vector<TableEntry> EigenvalueTable::mismatches() const {
  std::vector<TableEntry> out;
  for (const auto& r : rows)
    if (!r.match()) out.push_back(r);
  return out;
}

EigenvalueTable reproduce_table() {
  EigenvalueTable t;
  for (int d = kTableMinD; d <= kTableMaxD; ++d)
    for (int N = kTableMinN; N <= kTableMaxN; ++N)
      t.rows.push_back(TableEntry{d, N, lambda_min(d, N), BigInt(published_lambda(d, N))});
  return t;
}

bool is_cusp(int d, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("is_cusp: N must be >= 2");
  const BigInt prev = vandermonde_degree(d, N - 1);
  const BigInt here = vandermonde_degree(d, N);
  const BigInt next = vandermonde_degree(d, N + 1);
  return next - here > here - prev;
}

GapSeries gap_series(int d, std::int64_t n_max, int digits) {
  if (n_max < 2) throw std::invalid_argument("gap_series: n_max must be >= 2");
  validate({d, 1});
  const int resolved = digits == hp::kInherit ? hp::working_digits() : digits;
  hp::check_digits(resolved);

  GapSeries s;
  s.d = d;
  s.points.resize(static_cast<std::size_t>(n_max - 1));
  const auto count = static_cast<std::ptrdiff_t>(s.points.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    hp::PrecisionGuard guard(resolved);
    GapPoint& p = s.points[static_cast<std::size_t>(i)];
    p.N = i + 2;
    p.degree = vandermonde_degree(d, p.N);
    p.xi = xi(d, hp::Real(p.N));
    p.gap = hp::Real(p.degree) - p.xi;
    p.bound = gap_bound(d, p.N);
    p.is_cusp = is_cusp(d, p.N);
  }
  for (const auto& p : s.points)
    if (p.is_cusp) s.cusps.push_back(p.N);
  return s;
}

bool OracleCheck::passed() const {
  return !skipped && degree_found && BigInt(*degree_found) == expected_degree && witness_verified && psi_checked &&
         psi_antisymmetric && psi_homogeneous && psi_harmonic;
}

bool OracleSweepReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.skipped && !c.passed()) return false;
  return true;
}

OracleCheck oracle_check(int d, int N, std::uint64_t oracle_budget) {
  OracleCheck c;
  c.d = d;
  c.N = N;
  c.expected_degree = vandermonde_degree(d, N);
  WorkBudget budget = WorkBudget::from_environment();
  budget.max_oracle_monomials = oracle_budget;
  const std::int64_t max_degree = to_int64(c.expected_degree);

  try {
    const OracleResult r = min_antisym_harmonic_degree(d, N, max_degree, budget);
    c.degree_found = r.degree_found;
    c.space_dimension = r.space_dimension;
    // The oracle verifies its witness before returning one.
    c.witness_verified = r.witness.has_value();
  } catch (const BudgetExceeded& e) {
    c.skipped = true;
    c.note = e.what();
    return c;
  }

  try {
    const Polynomial psi = slater_determinant(d, N, budget);
    const auto components = homogeneous_components(psi);
    c.psi_checked = true;
    c.psi_antisymmetric = is_antisymmetric(psi, d);
    c.psi_homogeneous = components.size() == 1 && BigInt(components.begin()->first) == c.expected_degree;
    c.psi_harmonic = laplacian(psi).is_zero();
  } catch (const BudgetExceeded& e) {
    c.note = e.what();
  }
  return c;
}

OracleSweepReport oracle_sweep(int max_dn, std::uint64_t oracle_budget) {
  std::vector<std::pair<int, int>> cells;
  for (int d = 1; 2 * d <= max_dn; ++d)
    for (int N = 2; d * N <= max_dn; ++N) cells.emplace_back(d, N);

  OracleSweepReport report;
  report.checks.resize(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto [d, N] = cells[static_cast<std::size_t>(i)];
    report.checks[static_cast<std::size_t>(i)] = oracle_check(d, N, oracle_budget);
  }
  return report;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or text)");
}

void write_table(std::ostream& os, const EigenvalueTable& t, Format f) {
  switch (f) {
    case Format::csv:
      os << "d,N,lambda_computed,lambda_paper,match\n";
      for (const auto& r : t.rows)
        os << r.d << ',' << r.N << ',' << r.computed << ',' << r.published << ',' << csv_bool(r.match()) << '\n';
      break;
    case Format::json:
      os << "[\n";
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        os << "  {\"d\": " << r.d << ", \"N\": " << r.N << ", \"lambda_computed\": " << r.computed
           << ", \"lambda_paper\": " << r.published << ", \"match\": " << json_bool(r.match()) << '}'
           << (i + 1 < t.rows.size() ? ",\n" : "\n");
      }
      os << "]\n";
      break;
    case Format::text: {
      std::vector<int> ns;
      for (const auto& r : t.rows)
        if (std::find(ns.begin(), ns.end(), r.N) == ns.end()) ns.push_back(r.N);
      os << std::setw(6) << "";
      for (int n : ns) os << std::setw(8) << ("N=" + std::to_string(n));
      os << '\n';
      int current = -1;
      for (const auto& r : t.rows) {
        if (r.d != current) {
          if (current != -1) os << '\n';
          current = r.d;
          os << std::setw(6) << ("d=" + std::to_string(r.d));
        }
        os << std::setw(8) << (r.computed.get_str() + (r.match() ? "" : "!"));
      }
      os << '\n';
      const auto bad = t.mismatches();
      os << (bad.empty() ? "all entries match the published table\n"
                         : std::to_string(bad.size()) + " entries differ from the published table (marked !)\n");
      break;
    }
  }
}

void write_gap_series(std::ostream& os, const std::vector<GapSeries>& series, Format f) {
  switch (f) {
    case Format::csv:
    case Format::text:
      os << "d,N,V,xi,gap,bound,is_cusp\n";
      for (const auto& s : series)
        for (const auto& p : s.points)
          os << s.d << ',' << p.N << ',' << p.degree << ',' << p.xi.str(17) << ',' << p.gap.str(17) << ','
             << p.bound.str(17) << ',' << csv_bool(p.is_cusp) << '\n';
      break;
    case Format::json: {
      os << "[\n";
      bool first = true;
      for (const auto& s : series)
        for (const auto& p : s.points) {
          if (!first) os << ",\n";
          first = false;
          os << "  {\"d\": " << s.d << ", \"N\": " << p.N << ", \"V\": " << p.degree << ", \"xi\": " << p.xi.str(17)
             << ", \"gap\": " << p.gap.str(17) << ", \"bound\": " << p.bound.str(17)
             << ", \"is_cusp\": " << json_bool(p.is_cusp) << '}';
        }
      os << (first ? "]\n" : "\n]\n");
      break;
    }
  }
}

namespace {

std::string oracle_status(const OracleCheck& c) {
  if (c.skipped) return "skipped";
  return c.passed() ? "pass" : "fail";
}

std::string found_str(const OracleCheck& c) { return c.degree_found ? std::to_string(*c.degree_found) : ""; }

std::string json_escape(const std::string& s) {
  std::ostringstream o;
  for (char ch : s) {
    switch (ch) {
      case '"': o << "\\\""; break;
      case '\\': o << "\\\\"; break;
      case '\n': o << "\\n"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20)
          o << "\\u" << std::hex << std::setw(4) << std::setfill('0') << static_cast<int>(ch) << std::dec
            << std::setfill(' ');
        else
          o << ch;
    }
  }
  return o.str();
}

}  // namespace

void write_oracle_report(std::ostream& os, const OracleSweepReport& r, Format f) {
  switch (f) {
    case Format::csv:
      os << "d,N,expected_degree,degree_found,space_dimension,witness_verified,psi_antisymmetric,psi_homogeneous,"
            "psi_harmonic,status\n";
      for (const auto& c : r.checks)
        os << c.d << ',' << c.N << ',' << c.expected_degree << ',' << found_str(c) << ',' << c.space_dimension << ','
           << csv_bool(c.witness_verified) << ',' << csv_bool(c.psi_antisymmetric) << ','
           << csv_bool(c.psi_homogeneous) << ',' << csv_bool(c.psi_harmonic) << ',' << oracle_status(c) << '\n';
      break;
    case Format::json:
      os << "[\n";
      for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        os << "  {\"d\": " << c.d << ", \"N\": " << c.N << ", \"expected_degree\": " << c.expected_degree
           << ", \"degree_found\": " << (c.degree_found ? std::to_string(*c.degree_found) : "null")
           << ", \"space_dimension\": " << c.space_dimension
           << ", \"witness_verified\": " << json_bool(c.witness_verified)
           << ", \"psi_antisymmetric\": " << json_bool(c.psi_antisymmetric)
           << ", \"psi_homogeneous\": " << json_bool(c.psi_homogeneous)
           << ", \"psi_harmonic\": " << json_bool(c.psi_harmonic) << ", \"status\": \"" << oracle_status(c)
           << "\", \"note\": \"" << json_escape(c.note) << "\"}" << (i + 1 < r.checks.size() ? ",\n" : "\n");
      }
      os << "]\n";
      break;
    case Format::text:
      for (const auto& c : r.checks) {
        os << "d=" << c.d << " N=" << c.N << ": ";
        if (c.skipped) {
          os << "skipped (" << c.note << ")\n";
          continue;
        }
        os << "closed form " << c.expected_degree << ", oracle " << (c.degree_found ? found_str(c) : "none")
           << " (solution space " << c.space_dimension << "), psi antisymmetric="
           << csv_bool(c.psi_antisymmetric) << " homogeneous=" << csv_bool(c.psi_homogeneous)
           << " harmonic=" << csv_bool(c.psi_harmonic) << " -> " << oracle_status(c) << '\n';
      }
      os << (r.all_passed() ? "all checks agree\n" : "some checks FAILED\n");
      break;
  }
}

}  // namespace antisym
