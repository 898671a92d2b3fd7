#pragma once

// Exact counting quantities behind the degree of the antisymmetric
// Vandermonde-type determinant, plus the floating asymptotic approximants.
//
// Notation: d is the per-particle dimension, N the particle count, m the
// shell index (all monomials of degree <= m in d variables fill N_m slots).

#include <cstdint>

#include "antisym/exact.hpp"
#include "antisym/real.hpp"

namespace antisym {

struct Dimension {
  int d = 1;
  std::int64_t N = 1;

  [[nodiscard]] std::int64_t total() const { return d * N; }
  friend auto operator<=>(const Dimension&, const Dimension&) = default;
};

/// Throws std::invalid_argument unless d >= 1 and N >= min_particles.
void validate(const Dimension& dim, std::int64_t min_particles = 1);

struct DegreeReport {
  Dimension dim;
  std::int64_t m = 0;
  BigInt n_m;     // filled_count(d, m)
  BigInt degree;  // vandermonde_degree(d, N)
  BigInt lambda;  // degree * (degree + d*N - 2)
};

/// Constants of the remainder estimate for the degree asymptotics.
struct AsymptoticBounds {
  int d = 1;
  Rational c_d;  // (d-1)^2 / 8
  Rational d_d;  // d(2d+3)/(d+1) * c_d + d/2
  /// The N^{1-1/d} coefficient of the gap bound is gap_coefficient / (d!)^{1/d}.
  Rational gap_coefficient;
};

struct Means {
  Rational arith;
  hp::Real geom;
};

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Number of degree-p monomials in d variables.
BigInt monomial_count(int d, std::int64_t p);

/// Number of monomials of degree <= m in d variables, C(m+d, d).
BigInt filled_count(int d, std::int64_t m);

/// The unique m with filled_count(d, m) <= N < filled_count(d, m+1).
std::int64_t shell_index(int d, std::int64_t N);

BigInt vandermonde_degree(int d, std::int64_t N);

/// Intermediate-shell formula N(m+1) - (m+d+1)/(d+1) * N_m evaluated for an
/// explicit m; valid on [N_m, N_{m+1}] and used to check shell continuity.
BigInt vandermonde_degree_on_shell(int d, std::int64_t m, const BigInt& N);

/// Degree at a filled shell, d*m/(d+1) * N_m.
BigInt vandermonde_degree_filled(int d, std::int64_t m);

/// Minimal Laplace-Beltrami eigenvalue on antisymmetric functions over
/// S^{dN-1}. Defined for N >= 2 (d = 1, N = 2 gives 1).
BigInt lambda_min(int d, std::int64_t N);

DegreeReport degree_report(int d, std::int64_t N);

/// xi_d(N) = d/(d+1) (d!)^{1/d} N^{1+1/d} - d/2 N.
hp::Real xi(int d, const hp::Real& N, int digits = hp::kInherit);

/// Right-hand side of 0 <= V_d(N) - xi_d(N) <= D_d N^{1-1/d} / (d!)^{1/d}.
hp::Real gap_bound(int d, std::int64_t N, int digits = hp::kInherit);

AsymptoticBounds asymptotic_bounds(int d);

/// Arithmetic and geometric means of m+1, ..., m+d.
Means means(int d, std::int64_t m, int digits = hp::kInherit);

}  // namespace antisym
