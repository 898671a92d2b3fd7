#include "antisym/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace antisym {
namespace {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void require_d(int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1, got " + std::to_string(d));
}

}  // namespace

void validate(const Dimension& dim, std::int64_t min_particles) {
  require_d(dim.d);
  if (dim.N < min_particles)
    throw std::invalid_argument("N must be >= " + std::to_string(min_particles) + ", got " +
                                std::to_string(dim.N));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt monomial_count(int d, std::int64_t p) {
  require_d(d);
  if (p < 0) throw std::invalid_argument("monomial_count: p must be nonnegative");
  return binomial(p + d - 1, d - 1);
}

BigInt filled_count(int d, std::int64_t m) {
  require_d(d);
  if (m < 0) throw std::invalid_argument("filled_count: m must be nonnegative");
  return binomial(m + d, d);
}

std::int64_t shell_index(int d, std::int64_t N) {
  validate({d, N});
  const BigInt target = N;
  // filled_count(d, m) is strictly increasing in m: gallop to an upper
  // bracket, then bisect for the last m with filled_count(d, m) <= N.
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (filled_count(d, hi) <= target) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (filled_count(d, mid) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

BigInt vandermonde_degree_filled(int d, std::int64_t m) {
  const BigInt n_m = filled_count(d, m);
  const BigInt num = BigInt(d) * m * n_m;
  if (num % (d + 1) != 0) throw std::logic_error("filled-shell degree is not integral");
  return num / (d + 1);
}

BigInt vandermonde_degree_on_shell(int d, std::int64_t m, const BigInt& N) {
  const BigInt n_m = filled_count(d, m);
  const BigInt weighted = BigInt(m + d + 1) * n_m;
  if (weighted % (d + 1) != 0) throw std::logic_error("(m+d+1) N_m is not divisible by d+1");
  return N * (m + 1) - weighted / (d + 1);
}

BigInt vandermonde_degree(int d, std::int64_t N) {
  const std::int64_t m = shell_index(d, N);
  if (filled_count(d, m) == N) return vandermonde_degree_filled(d, m);
  return vandermonde_degree_on_shell(d, m, BigInt(N));
}

BigInt lambda_min(int d, std::int64_t N) {
  validate({d, N}, 2);
  const BigInt v = vandermonde_degree(d, N);
  return v * (v + BigInt(d) * N - 2);
}

DegreeReport degree_report(int d, std::int64_t N) {
  validate({d, N});
  DegreeReport r;
  r.dim = {d, N};
  r.m = shell_index(d, N);
  r.n_m = filled_count(d, r.m);
  r.degree = vandermonde_degree(d, N);
  r.lambda = r.degree * (r.degree + BigInt(d) * N - 2);
  return r;
}

hp::Real xi(int d, const hp::Real& N, int digits) {
  require_d(d);
  hp::PrecisionGuard guard(digits);
  if (N < hp::Real(1)) throw std::invalid_argument("xi: N must be >= 1");
  const hp::Real dd(d);
  const hp::Real root_fact = hp::root(hp::Real(factorial(static_cast<unsigned long>(d))),
                                      static_cast<unsigned long>(d));
  const hp::Real growth = hp::pow(N, hp::Real(1) + hp::Real(1) / dd);
  return dd / hp::Real(d + 1) * root_fact * growth - dd / hp::Real(2) * N;
}

AsymptoticBounds asymptotic_bounds(int d) {
  require_d(d);
  AsymptoticBounds b;
  b.d = d;
  b.c_d = fraction((d - 1) * (d - 1), 8);
  b.d_d = fraction(d * (2 * d + 3), d + 1) * b.c_d + fraction(d, 2);
  b.gap_coefficient = b.d_d;
  return b;
}

hp::Real gap_bound(int d, std::int64_t N, int digits) {
  validate({d, N});
  hp::PrecisionGuard guard(digits);
  const AsymptoticBounds b = asymptotic_bounds(d);
  const hp::Real dd(d);
  const hp::Real root_fact = hp::root(hp::Real(factorial(static_cast<unsigned long>(d))),
                                      static_cast<unsigned long>(d));
  return hp::Real(b.gap_coefficient) / root_fact *
         hp::pow(hp::Real(N), hp::Real(1) - hp::Real(1) / dd);
}

Means means(int d, std::int64_t m, int digits) {
  require_d(d);
  if (m < 1) throw std::invalid_argument("means: m must be >= 1");
  hp::PrecisionGuard guard(digits);
  BigInt product = 1;
  for (int k = 1; k <= d; ++k) product *= m + k;
  Means out{fraction(2 * m + d + 1, 2), hp::Real()};
  out.geom = hp::root(hp::Real(product), static_cast<unsigned long>(d));
  return out;
}

}  // namespace antisym
