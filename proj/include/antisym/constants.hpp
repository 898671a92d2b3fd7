#pragma once

// Sharp Hardy, Sobolev and Caffarelli-Kohn-Nirenberg constants on
// antisymmetric functions of N particles in R^d, their large-N leading
// terms, and a sufficient positivity test for -Delta - V with radial V.
//
// All high-precision functions accept `digits` (kInherit = the calling
// thread's working precision, 50 digits unless a PrecisionGuard says
// otherwise).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "antisym/combinatorics.hpp"
#include "antisym/exact.hpp"
#include "antisym/radial.hpp"
#include "antisym/real.hpp"

namespace antisym {

struct HardyConstant {
  Dimension dim;
  Rational classical_part;   // (dN-2)^2 / 4
  BigInt antisymmetric_part;  // lambda_d(N)
  Rational total;             // H_A(dN)
};

/// Requires N >= 2.
HardyConstant hardy_constant(int d, std::int64_t N);

/// (d/(d+1) (d!)^{1/d} N^{1+1/d} - 1)^2, a lower bound for H_A(dN).
hp::Real hardy_lower_bound(int d, std::int64_t N, int digits = hp::kInherit);

/// d^2/(d+1)^2 (d!)^{2/d} N^{2+2/d}.
hp::Real hardy_leading_term(int d, std::int64_t N, int digits = hp::kInherit);

/// Surface measure of the unit sphere in R^n, 2 pi^{n/2} / Gamma(n/2).
hp::Real sphere_surface_area(std::int64_t n, int digits = hp::kInherit);

/// S(n) = pi n (n-2) (Gamma(n/2) / Gamma(n))^{2/n}, n >= 3.
hp::Real sobolev_classical(std::int64_t n, int digits = hp::kInherit);

/// The same constant written as n(n-2)/4 |S^n|^{2/n}, with |S^n| the area of
/// the unit sphere in R^{n+1}.
hp::Real sobolev_classical_sphere_form(std::int64_t n, int digits = hp::kInherit);

struct SobolevConstant {
  std::int64_t n = 0;
  hp::Real classical;         // S(dN)
  hp::Real factorial_factor;  // (N!)^{2/(dN)}
  hp::Real antisymmetric;     // factorial_factor * classical
  /// pi dN(dN-2) (Gamma(dN/2) N! / Gamma(dN))^{2/(dN)}, evaluated independently.
  hp::Real antisymmetric_gamma_form;
};

/// Requires d*N >= 3 and N >= 1. Throws std::logic_error if the two closed
/// forms disagree beyond 1e-12 relative.
SobolevConstant sobolev_antisym(int d, std::int64_t N, int digits = hp::kInherit);

/// pi e^{1-2/d} / 2 * d * N^{1+2/d}.
hp::Real sobolev_antisym_leading_term(int d, std::int64_t N, int digits = hp::kInherit);

struct CknParameters {
  Dimension dim;
  hp::Real nu;
  hp::Real p;      // 2dN / (dN - 2nu)
  hp::Real gamma;  // 2dN (nu - 1) / (dN - 2nu)
};

/// Requires d*N >= 3 and 0 <= nu <= 1.
CknParameters ckn_parameters(int d, std::int64_t N, const hp::Real& nu, int digits = hp::kInherit);

struct CknConstants {
  hp::Real upper;       // S_A^{-nu}
  hp::Real lower_form;  // S_A^{nu} H_A^{1-nu}
};

CknConstants ckn_constant(int d, std::int64_t N, const hp::Real& nu, int digits = hp::kInherit);

/// (pi e^{1-2/d}/2)^nu d^{2-nu} / (d+1)^{2-2nu} (d!)^{(2-2nu)/d} N^{2+2/d-nu}.
hp::Real ckn_leading_term(int d, std::int64_t N, const hp::Real& nu, int digits = hp::kInherit);

enum class Verdict { positive, inconclusive };

std::string to_string(Verdict v);

/// The weighted integral of V diverges at 0 or at infinity.
class NonIntegrable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct QuadratureOptions {
  double relative_tolerance = 1e-10;
  unsigned max_depth = 30;
};

struct PositivityVerdict {
  CknParameters params;
  hp::Real threshold;         // K_d(N, nu)
  hp::Real weighted_integral;  // |S^{dN-1}| int V^{dN/(2nu)} r^{(1-nu)/nu dN + dN - 1} dr
  hp::Real integral_error;
  hp::Real potential_norm;     // weighted_integral^{2nu/(dN)}
  hp::Real quadrature_error;   // first-order propagation of integral_error
  Verdict verdict = Verdict::inconclusive;
  hp::Real margin;             // threshold - (potential_norm + quadrature_error)
};

/// Requires d*N >= 3 and 0 < nu <= 1. The verdict is positive iff
/// potential_norm + quadrature_error <= threshold.
PositivityVerdict positivity_check(int d, std::int64_t N, const hp::Real& nu, const RadialPotential& potential,
                                   int digits = hp::kInherit, const QuadratureOptions& quad = {});

}  // namespace antisym
