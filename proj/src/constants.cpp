#include "antisym/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace antisym {
namespace {

hp::Real factorial_real(std::int64_t n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return hp::Real(f);
}

void require_total_dim(int d, std::int64_t N) {
  validate({d, N});
  if (static_cast<std::int64_t>(d) * N < 3)
    throw std::invalid_argument("d*N must be >= 3, got d=" + std::to_string(d) + ", N=" + std::to_string(N));
}

void require_nu(const hp::Real& nu) {
  if (!(nu >= hp::Real(0) && nu <= hp::Real(1)))
    throw std::invalid_argument("nu must lie in [0, 1], got " + nu.str(17));
}

// d/(d+1) (d!)^{1/d} N^{1+1/d}
hp::Real leading_degree(int d, std::int64_t N) {
  const hp::Real dd(d);
  return dd / hp::Real(d + 1) * hp::root(factorial_real(d), static_cast<unsigned long>(d)) *
         hp::pow(hp::Real(N), hp::Real(1) + hp::Real(1) / dd);
}

// pi e^{1-2/d} / 2
hp::Real sobolev_asymptotic_prefactor(int d) {
  return hp::pi() * hp::exp(hp::Real(1) - hp::Real(2) / hp::Real(d)) / hp::Real(2);
}

}  // namespace

HardyConstant hardy_constant(int d, std::int64_t N) {
  validate({d, N}, 2);
  HardyConstant h;
  h.dim = {d, N};
  const BigInt n = BigInt(d) * N;
  h.classical_part = fraction((n - 2) * (n - 2), 4);
  h.antisymmetric_part = lambda_min(d, N);
  h.total = h.classical_part + Rational(h.antisymmetric_part);
  return h;
}

hp::Real hardy_lower_bound(int d, std::int64_t N, int digits) {
  validate({d, N}, 2);
  hp::PrecisionGuard guard(digits);
  const hp::Real base = leading_degree(d, N) - hp::Real(1);
  return base * base;
}

hp::Real hardy_leading_term(int d, std::int64_t N, int digits) {
  validate({d, N}, 2);
  hp::PrecisionGuard guard(digits);
  const hp::Real a = leading_degree(d, N);
  return a * a;
}

hp::Real sphere_surface_area(std::int64_t n, int digits) {
  if (n < 1) throw std::invalid_argument("sphere_surface_area: n must be >= 1");
  hp::PrecisionGuard guard(digits);
  const hp::Real half = hp::Real(n) / hp::Real(2);
  return hp::Real(2) * hp::pow(hp::pi(), half) / hp::gamma(half);
}

hp::Real sobolev_classical(std::int64_t n, int digits) {
  if (n < 3) throw std::invalid_argument("sobolev_classical: n must be >= 3");
  hp::PrecisionGuard guard(digits);
  const hp::Real nn(n);
  const hp::Real log_ratio = hp::lgamma(nn / hp::Real(2)) - hp::lgamma(nn);
  return hp::pi() * nn * hp::Real(n - 2) * hp::exp(hp::Real(2) / nn * log_ratio);
}

hp::Real sobolev_classical_sphere_form(std::int64_t n, int digits) {
  if (n < 3) throw std::invalid_argument("sobolev_classical_sphere_form: n must be >= 3");
  hp::PrecisionGuard guard(digits);
  const hp::Real nn(n);
  return nn * hp::Real(n - 2) / hp::Real(4) * hp::pow(sphere_surface_area(n + 1), hp::Real(2) / nn);
}

SobolevConstant sobolev_antisym(int d, std::int64_t N, int digits) {
  require_total_dim(d, N);
  hp::PrecisionGuard guard(digits);
  SobolevConstant s;
  s.n = static_cast<std::int64_t>(d) * N;
  const hp::Real nn(s.n);
  const hp::Real exponent = hp::Real(2) / nn;
  s.classical = sobolev_classical(s.n);
  s.factorial_factor = hp::pow(factorial_real(N), exponent);
  s.antisymmetric = s.factorial_factor * s.classical;
  const hp::Real log_inner = hp::lgamma(nn / hp::Real(2)) + hp::lgamma(hp::Real(N + 1)) - hp::lgamma(nn);
  s.antisymmetric_gamma_form = hp::pi() * nn * hp::Real(s.n - 2) * hp::exp(exponent * log_inner);
  if (hp::relative_difference(s.antisymmetric, s.antisymmetric_gamma_form) > hp::Real(1e-12))
    throw std::logic_error("antisymmetric Sobolev closed forms disagree");
  return s;
}

hp::Real sobolev_antisym_leading_term(int d, std::int64_t N, int digits) {
  validate({d, N});
  hp::PrecisionGuard guard(digits);
  return sobolev_asymptotic_prefactor(d) * hp::Real(d) *
         hp::pow(hp::Real(N), hp::Real(1) + hp::Real(2) / hp::Real(d));
}

CknParameters ckn_parameters(int d, std::int64_t N, const hp::Real& nu, int digits) {
  require_total_dim(d, N);
  hp::PrecisionGuard guard(digits);
  require_nu(nu);
  CknParameters c;
  c.dim = {d, N};
  c.nu = nu;
  const hp::Real n(static_cast<std::int64_t>(d) * N);
  const hp::Real denom = n - hp::Real(2) * nu;
  c.p = hp::Real(2) * n / denom;
  c.gamma = hp::Real(2) * n * (nu - hp::Real(1)) / denom;
  return c;
}

CknConstants ckn_constant(int d, std::int64_t N, const hp::Real& nu, int digits) {
  require_total_dim(d, N);
  hp::PrecisionGuard guard(digits);
  require_nu(nu);
  const hp::Real s = sobolev_antisym(d, N).antisymmetric;
  const hp::Real h(hardy_constant(d, N).total);
  return CknConstants{hp::pow(s, -nu), hp::pow(s, nu) * hp::pow(h, hp::Real(1) - nu)};
}

hp::Real ckn_leading_term(int d, std::int64_t N, const hp::Real& nu, int digits) {
  validate({d, N});
  hp::PrecisionGuard guard(digits);
  require_nu(nu);
  const hp::Real dd(d);
  const hp::Real two_minus = hp::Real(2) - nu;
  const hp::Real two_minus_two = hp::Real(2) - hp::Real(2) * nu;
  return hp::pow(sobolev_asymptotic_prefactor(d), nu) * hp::pow(dd, two_minus) /
         hp::pow(hp::Real(d + 1), two_minus_two) * hp::pow(factorial_real(d), two_minus_two / dd) *
         hp::pow(hp::Real(N), hp::Real(2) + hp::Real(2) / dd - nu);
}

std::string to_string(Verdict v) { return v == Verdict::positive ? "positive" : "inconclusive"; }

PositivityVerdict positivity_check(int d, std::int64_t N, const hp::Real& nu, const RadialPotential& potential,
                                   int digits, const QuadratureOptions& quad) {
  require_total_dim(d, N);
  hp::PrecisionGuard guard(digits);
  require_nu(nu);
  if (nu.is_zero()) throw std::invalid_argument("positivity_check requires nu > 0");

  PositivityVerdict out;
  out.params = ckn_parameters(d, N, nu);
  out.threshold = ckn_constant(d, N, nu).lower_form;

  const auto n = static_cast<double>(static_cast<std::int64_t>(d) * N);
  const double nu_d = nu.to_double();
  const double q = n / (2 * nu_d);                      // power applied to V
  const double w = (1 - nu_d) / nu_d * n + n - 1;       // radial weight exponent incl. Jacobian

  const std::vector<double> pts = potential.breakpoints();
  double integral = 0;
  double error = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i];
    const double hi = pts[i + 1];
    std::vector<const RadialTerm*> active;
    for (const auto& t : potential.terms())
      if (t.coeff > 0 && t.lower <= lo && t.upper >= hi) active.push_back(&t);
    if (active.empty()) continue;

    const auto [min_it, max_it] = std::minmax_element(
        active.begin(), active.end(), [](const RadialTerm* a, const RadialTerm* b) { return a->power < b->power; });
    if (std::isinf(hi) && (*max_it)->power * q + w >= -1)
      throw NonIntegrable("weighted potential is not integrable at infinity (line " +
                          std::to_string((*max_it)->line) + ")");
    if (lo == 0 && (*min_it)->power * q + w <= -1)
      throw NonIntegrable("weighted potential is not integrable at r = 0 (line " + std::to_string((*min_it)->line) +
                          ")");

    auto integrand = [&](double r) {
      if (r <= 0) return 0.0;
      double v = 0;
      for (const auto* t : active) v += t->coeff * std::pow(r, t->power);
      if (v <= 0) return 0.0;
      return std::exp(q * std::log(v) + w * std::log(r));
    };
    double piece_error = 0;
    const double piece = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, lo, hi, quad.max_depth, quad.relative_tolerance, &piece_error);
    if (!std::isfinite(piece)) throw NonIntegrable("weighted potential integral diverged");
    integral += piece;
    error += std::abs(piece_error);
  }

  const hp::Real area = sphere_surface_area(static_cast<std::int64_t>(n));
  out.weighted_integral = area * hp::Real(integral);
  out.integral_error = area * hp::Real(error);
  const hp::Real exponent = hp::Real(2) * nu / hp::Real(static_cast<std::int64_t>(n));
  if (out.weighted_integral.sign() > 0) {
    out.potential_norm = hp::pow(out.weighted_integral, exponent);
    out.quadrature_error = exponent * out.potential_norm * out.integral_error / out.weighted_integral;
  }
  out.margin = out.threshold - (out.potential_norm + out.quadrature_error);
  out.verdict = out.margin.sign() >= 0 ? Verdict::positive : Verdict::inconclusive;
  return out;
}

}  // namespace antisym
