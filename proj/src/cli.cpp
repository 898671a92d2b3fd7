#include "antisym/cli.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "antisym/constants.hpp"
#include "antisym/parallel.hpp"
#include "antisym/polyalg.hpp"
#include "antisym/radial.hpp"
#include "antisym/verify.hpp"

namespace antisym::cli {
namespace {

constexpr int kPrintDigits = 17;

// Usage error tied to a flag, reported as "error: <flag>: <message>".
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& msg) : std::runtime_error(flag + ": " + msg) {}
};

long parse_long(const std::string& s) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::pair<long, long> flag_range(const std::string& flag, const std::string& text) {
  try {
    return parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  }
}

struct Common {
  std::string format = "text";
  std::string output;
  int precision = hp::kDefaultDigits;
  int jobs = 0;
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("--output", "cannot open '" + path + "' for writing");
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string json_real(const hp::Real& r) { return r.str(kPrintDigits); }
std::string json_string(const std::string& s) { return "\"" + s + "\""; }

// ---- constants ---------------------------------------------------------

struct ConstantsRow {
  DegreeReport degree;
  HardyConstant hardy;
  std::optional<SobolevConstant> sobolev;
  std::optional<std::string> nu_text;
  std::optional<CknParameters> ckn_params;
  std::optional<CknConstants> ckn;
};

int cmd_constants(const Common& common, const std::string& d_text, const std::string& n_text,
                  const std::vector<std::string>& nus, std::ostream& out) {
  const auto [d_lo, d_hi] = flag_range("--d", d_text);
  const auto [n_lo, n_hi] = flag_range("--N", n_text);
  if (d_lo < 1) throw UsageError("--d", "d >= 1 required");
  if (n_lo < 2) throw UsageError("--N", "N >= 2 required for antisymmetric constants");
  std::vector<hp::Real> nu_values;
  for (const auto& t : nus) {
    try {
      nu_values.emplace_back(t);
    } catch (const std::invalid_argument&) {
      throw UsageError("--nu", "not a decimal number: '" + t + "'");
    }
    if (nu_values.back() < hp::Real(0) || nu_values.back() > hp::Real(1))
      throw UsageError("--nu", "nu must lie in [0, 1], got " + t);
  }
  if (!nus.empty() && d_lo * n_lo < 3) throw UsageError("--nu", "CKN constants require d*N >= 3");

  std::vector<std::pair<int, long>> cells;
  for (long d = d_lo; d <= d_hi; ++d)
    for (long n = n_lo; n <= n_hi; ++n) cells.emplace_back(static_cast<int>(d), n);

  std::vector<std::vector<ConstantsRow>> results(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
  const int digits = common.precision;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    hp::PrecisionGuard guard(digits);
    const auto [d, n] = cells[static_cast<std::size_t>(i)];
    ConstantsRow base;
    base.degree = degree_report(d, n);
    base.hardy = hardy_constant(d, n);
    if (static_cast<long>(d) * n >= 3) base.sobolev = sobolev_antisym(d, n);
    auto& rows = results[static_cast<std::size_t>(i)];
    if (nus.empty()) {
      rows.push_back(base);
    } else {
      for (std::size_t k = 0; k < nus.size(); ++k) {
        ConstantsRow row = base;
        row.nu_text = nus[k];
        row.ckn_params = ckn_parameters(d, n, nu_values[k]);
        row.ckn = ckn_constant(d, n, nu_values[k]);
        rows.push_back(std::move(row));
      }
    }
  }

  const Format f = parse_format(common.format);
  auto real_or = [](const std::optional<hp::Real>& r, const char* missing) {
    return r ? r->str(kPrintDigits) : std::string(missing);
  };
  if (f == Format::csv) {
    out << "d,N,m,N_m,V,lambda,H_A_classical,H_A,H_A_float,S,S_A,factorial_factor,nu,p,gamma,K_upper,K\n";
  } else if (f == Format::json) {
    out << "[\n";
  }
  bool first = true;
  for (const auto& rows : results) {
    for (const auto& r : rows) {
      hp::PrecisionGuard guard(digits);
      const hp::Real h_float(r.hardy.total);
      const auto s = r.sobolev ? std::optional<hp::Real>(r.sobolev->classical) : std::nullopt;
      const auto sa = r.sobolev ? std::optional<hp::Real>(r.sobolev->antisymmetric) : std::nullopt;
      const auto ff = r.sobolev ? std::optional<hp::Real>(r.sobolev->factorial_factor) : std::nullopt;
      const auto p = r.ckn_params ? std::optional<hp::Real>(r.ckn_params->p) : std::nullopt;
      const auto g = r.ckn_params ? std::optional<hp::Real>(r.ckn_params->gamma) : std::nullopt;
      const auto ku = r.ckn ? std::optional<hp::Real>(r.ckn->upper) : std::nullopt;
      const auto k = r.ckn ? std::optional<hp::Real>(r.ckn->lower_form) : std::nullopt;
      const auto& dr = r.degree;
      switch (f) {
        case Format::csv:
          out << dr.dim.d << ',' << dr.dim.N << ',' << dr.m << ',' << dr.n_m << ',' << dr.degree << ',' << dr.lambda
              << ',' << to_string(r.hardy.classical_part) << ',' << to_string(r.hardy.total) << ','
              << h_float.str(kPrintDigits) << ',' << real_or(s, "") << ',' << real_or(sa, "") << ','
              << real_or(ff, "") << ',' << r.nu_text.value_or("") << ',' << real_or(p, "") << ','
              << real_or(g, "") << ',' << real_or(ku, "") << ',' << real_or(k, "") << '\n';
          break;
        case Format::json:
          if (!first) out << ",\n";
          out << "  {\"d\": " << dr.dim.d << ", \"N\": " << dr.dim.N << ", \"m\": " << dr.m << ", \"N_m\": " << dr.n_m
              << ", \"V\": " << dr.degree << ", \"lambda\": " << dr.lambda
              << ", \"H_A_classical\": " << json_string(to_string(r.hardy.classical_part))
              << ", \"H_A\": " << json_string(to_string(r.hardy.total)) << ", \"H_A_float\": " << json_real(h_float)
              << ", \"S\": " << real_or(s, "null") << ", \"S_A\": " << real_or(sa, "null")
              << ", \"factorial_factor\": " << real_or(ff, "null")
              << ", \"nu\": " << (r.nu_text ? json_string(*r.nu_text) : "null") << ", \"p\": " << real_or(p, "null")
              << ", \"gamma\": " << real_or(g, "null") << ", \"K_upper\": " << real_or(ku, "null")
              << ", \"K\": " << real_or(k, "null") << '}';
          break;
        case Format::text:
          out << "d=" << dr.dim.d << " N=" << dr.dim.N << ": m=" << dr.m << " N_m=" << dr.n_m << " V=" << dr.degree
              << " lambda=" << dr.lambda << " H_A=" << to_string(r.hardy.total) << " (" << h_float.str(kPrintDigits)
              << ")";
          if (r.sobolev)
            out << " S=" << s->str(kPrintDigits) << " S_A=" << sa->str(kPrintDigits);
          else
            out << " S_A=n/a (d*N < 3)";
          if (r.nu_text)
            out << " nu=" << *r.nu_text << " p=" << p->str(kPrintDigits) << " gamma=" << g->str(kPrintDigits)
                << " K_upper=" << ku->str(kPrintDigits) << " K=" << k->str(kPrintDigits);
          out << '\n';
          break;
      }
      first = false;
    }
  }
  if (f == Format::json) out << (first ? "]\n" : "\n]\n");
  return kOk;
}

// ---- table -------------------------------------------------------------

int cmd_table(const Common& common, const std::string& d_filter, std::ostream& out) {
  EigenvalueTable t = reproduce_table();
  if (!d_filter.empty()) {
    const auto [lo, hi] = flag_range("--d", d_filter);
    if (lo < kTableMinD || hi > kTableMaxD)
      throw UsageError("--d", "the published table covers d = 1..6");
    std::erase_if(t.rows, [lo = lo, hi = hi](const TableEntry& e) { return e.d < lo || e.d > hi; });
  }
  write_table(out, t, parse_format(common.format));
  return t.all_match() ? kOk : kMismatch;
}

// ---- psi ---------------------------------------------------------------

int cmd_psi(const Common& common, int d, int n, bool check, std::ostream& out) {
  if (d < 1) throw UsageError("--d", "d >= 1 required");
  if (n < 1) throw UsageError("--N", "N >= 1 required");
  const WorkBudget budget = WorkBudget::from_environment();
  const Polynomial psi = slater_determinant(d, n, budget);
  const std::string text = render(psi, d);
  const Format f = parse_format(common.format);

  struct Check {
    std::string name;
    bool ok;
  };
  std::vector<Check> checks;
  if (check) {
    const BigInt v = vandermonde_degree(d, n);
    const auto comps = homogeneous_components(psi);
    checks.push_back({"antisymmetric", is_antisymmetric(psi, d)});
    checks.push_back({"homogeneous of degree " + v.get_str(),
                      comps.size() == 1 && BigInt(comps.begin()->first) == v});
    checks.push_back({"harmonic (laplacian is exactly zero)", laplacian(psi).is_zero()});
  }
  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;

  switch (f) {
    case Format::text:
      out << text << '\n';
      if (check) {
        out << "terms: " << psi.size() << '\n';
        for (const auto& c : checks) out << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
      }
      break;
    case Format::csv:
      out << "coefficient,monomial\n";
      for (const auto& [e, c] : psi.terms()) out << to_string(c) << ',' << render(Polynomial::monomial(e), d) << '\n';
      break;
    case Format::json:
      out << "{\"d\": " << d << ", \"N\": " << n << ", \"degree\": " << psi.degree() << ", \"terms\": " << psi.size()
          << ", \"polynomial\": " << json_string(text);
      if (check) {
        out << ", \"checks\": [";
        for (std::size_t i = 0; i < checks.size(); ++i)
          out << (i ? ", " : "") << "{\"name\": " << json_string(checks[i].name)
              << ", \"pass\": " << (checks[i].ok ? "true" : "false") << '}';
        out << ']';
      }
      out << "}\n";
      break;
  }
  return all_ok ? kOk : kMismatch;
}

// ---- figure ------------------------------------------------------------

int cmd_figure(const Common& common, const std::string& d_text, const std::string& n_text, std::ostream& out) {
  const auto [d_lo, d_hi] = flag_range("--d", d_text);
  const auto [n_lo, n_hi] = flag_range("--N", n_text);
  if (d_lo < 1) throw UsageError("--d", "d >= 1 required");
  if (n_lo < 2) throw UsageError("--N", "N >= 2 required");
  std::vector<GapSeries> series;
  for (long d = d_lo; d <= d_hi; ++d) {
    GapSeries s = gap_series(static_cast<int>(d), n_hi, common.precision);
    std::erase_if(s.points, [lo = n_lo](const GapPoint& p) { return p.N < lo; });
    std::erase_if(s.cusps, [lo = n_lo](std::int64_t c) { return c < lo; });
    series.push_back(std::move(s));
  }
  write_gap_series(out, series, parse_format(common.format));
  return kOk;
}

// ---- oracle ------------------------------------------------------------

int cmd_oracle(const Common& common, int max_dn, long budget, std::ostream& out) {
  if (max_dn < 2) throw UsageError("--max-dn", "must be >= 2");
  if (budget < 1) throw UsageError("--budget", "must be positive");
  const OracleSweepReport r = oracle_sweep(max_dn, static_cast<std::uint64_t>(budget));
  write_oracle_report(out, r, parse_format(common.format));
  return r.all_passed() ? kOk : kMismatch;
}

// ---- positivity --------------------------------------------------------

int cmd_positivity(const Common& common, const std::string& file, int d, long n, const std::string& nu_text,
                   std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("FILE", "cannot read '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const RadialPotential pot = parse_radial_potential(buf.str());
  if (d < 1) throw UsageError("--d", "d >= 1 required");
  if (n < 2) throw UsageError("--N", "N >= 2 required");
  if (static_cast<long>(d) * n < 3) throw UsageError("--N", "d*N >= 3 required");

  hp::PrecisionGuard guard(common.precision);
  hp::Real nu;
  try {
    nu = hp::Real(nu_text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--nu", "not a decimal number: '" + nu_text + "'");
  }
  if (!(nu > hp::Real(0)) || nu > hp::Real(1)) throw UsageError("--nu", "nu must lie in (0, 1]");
  const PositivityVerdict v = positivity_check(d, n, nu, pot);

  switch (parse_format(common.format)) {
    case Format::text:
      out << "verdict: " << to_string(v.verdict) << '\n'
          << "threshold K: " << v.threshold.str(kPrintDigits) << '\n'
          << "potential norm: " << v.potential_norm.str(kPrintDigits) << " +- " << v.quadrature_error.str(kPrintDigits)
          << '\n'
          << "weighted integral: " << v.weighted_integral.str(kPrintDigits) << '\n'
          << "margin: " << v.margin.str(kPrintDigits) << '\n';
      break;
    case Format::csv:
      out << "d,N,nu,p,gamma,threshold,weighted_integral,potential_norm,quadrature_error,margin,verdict\n"
          << d << ',' << n << ',' << nu_text << ',' << v.params.p.str(kPrintDigits) << ','
          << v.params.gamma.str(kPrintDigits) << ',' << v.threshold.str(kPrintDigits) << ','
          << v.weighted_integral.str(kPrintDigits) << ',' << v.potential_norm.str(kPrintDigits) << ','
          << v.quadrature_error.str(kPrintDigits) << ',' << v.margin.str(kPrintDigits) << ',' << to_string(v.verdict)
          << '\n';
      break;
    case Format::json:
      out << "{\"d\": " << d << ", \"N\": " << n << ", \"nu\": " << json_string(nu_text)
          << ", \"p\": " << json_real(v.params.p) << ", \"gamma\": " << json_real(v.params.gamma)
          << ", \"threshold\": " << json_real(v.threshold) << ", \"weighted_integral\": "
          << json_real(v.weighted_integral) << ", \"potential_norm\": " << json_real(v.potential_norm)
          << ", \"quadrature_error\": " << json_real(v.quadrature_error) << ", \"margin\": " << json_real(v.margin)
          << ", \"verdict\": " << json_string(to_string(v.verdict)) << "}\n";
      break;
  }
  return kOk;
}

}  // namespace

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const long lo = parse_long(text.substr(0, dots));
  const long hi = parse_long(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp Hardy, Sobolev and CKN constants on antisymmetric functions", "antisym"};
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--output", common.output, "Write the report to PATH instead of standard output");
  app.add_option("--precision", common.precision, "Working precision in decimal digits")
      ->check(CLI::Range(hp::kMinDigits, hp::kMaxDigits));
  app.add_option("--jobs", common.jobs, "Worker threads (default: number of processors)")
      ->check(CLI::PositiveNumber);

  std::string c_d, c_n;
  std::vector<std::string> c_nu;
  auto* constants = app.add_subcommand("constants", "Degree, Hardy, Sobolev and CKN constants");
  constants->add_option("--d", c_d, "Dimension per particle (a or a..b)")->required();
  constants->add_option("--N", c_n, "Particle count (a or a..b)")->required();
  constants->add_option("--nu", c_nu, "CKN interpolation parameters in [0,1]")->delimiter(',');

  std::string t_d;
  auto* table = app.add_subcommand("table", "Reproduce the minimal-eigenvalue table");
  table->add_option("--d", t_d, "Restrict to d (a or a..b)");

  int p_d = 0, p_n = 0;
  bool p_check = false;
  auto* psi = app.add_subcommand("psi", "Expand the antisymmetric determinant psi_N^(d)");
  psi->add_option("--d", p_d, "Dimension per particle")->required();
  psi->add_option("--N", p_n, "Particle count")->required();
  psi->add_flag("--check", p_check, "Verify antisymmetry, homogeneity and harmonicity");

  std::string f_d = "2..8", f_n = "2..100";
  auto* figure = app.add_subcommand("figure", "Gap between the degree and its asymptotic approximant");
  figure->add_option("--d", f_d, "Dimensions (a..b)")->capture_default_str();
  figure->add_option("--N", f_n, "Particle counts (a..b)")->capture_default_str();

  int o_max_dn = 8;
  long o_budget = 200000;
  auto* oracle = app.add_subcommand("oracle", "Brute-force minimal degree vs closed form");
  oracle->add_option("--max-dn", o_max_dn, "Largest d*N to check")->capture_default_str();
  oracle->add_option("--budget", o_budget, "Monomial-space cap per cell")->capture_default_str();

  std::string q_file, q_nu;
  int q_d = 0;
  long q_n = 0;
  auto* positivity = app.add_subcommand("positivity", "Sufficient positivity test for -Delta - V");
  positivity->add_option("FILE", q_file, "Radial potential descriptor")->required();
  positivity->add_option("--d", q_d, "Dimension per particle")->required();
  positivity->add_option("--N", q_n, "Particle count")->required();
  positivity->add_option("--nu", q_nu, "CKN parameter in (0,1]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (common.jobs > 0) parallel::set_threads(common.jobs);
    hp::PrecisionGuard guard(common.precision);
    Sink sink(common.output, out);
    if (*constants) return cmd_constants(common, c_d, c_n, c_nu, *sink);
    if (*table) return cmd_table(common, t_d, *sink);
    if (*psi) return cmd_psi(common, p_d, p_n, p_check, *sink);
    if (*figure) return cmd_figure(common, f_d, f_n, *sink);
    if (*oracle) return cmd_oracle(common, o_max_dn, o_budget, *sink);
    if (*positivity) return cmd_positivity(common, q_file, q_d, q_n, q_nu, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: work budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonIntegrable& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace antisym::cli
