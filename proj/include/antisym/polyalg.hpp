#pragma once

// Construction and symbolic checks of the antisymmetric determinant psi_N^(d)
// and a brute-force search for the minimal antisymmetric harmonic degree.
//
// slater_determinant and laplacian run on OpenMP workers; the *_serial
// variants are the single-threaded reference implementations. Both produce
// identical term maps.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "antisym/combinatorics.hpp"
#include "antisym/polynomial.hpp"

namespace antisym {

/// Caps on the symbolic work a single call may take on.
struct WorkBudget {
  /// Leibniz term cap; the estimate for psi_N^(d) is N!. Default 9!.
  std::uint64_t max_terms = 362880;
  /// Cap on d*N for d >= 2 when the budget has not been overridden.
  std::optional<std::int64_t> max_multi_dim_vars = 14;
  /// Cap on the number of degree-p monomials in d*N variables the oracle
  /// may enumerate.
  std::uint64_t max_oracle_monomials = 200000;

  /// Defaults, with ANTISYM_BUDGET (a positive integer term cap) replacing
  /// max_terms and lifting the d*N cap. Malformed values throw
  /// std::invalid_argument.
  static WorkBudget from_environment();
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t limit)
      : std::runtime_error(what), estimate_(estimate), limit_(limit) {}
  [[nodiscard]] std::uint64_t estimate() const { return estimate_; }
  [[nodiscard]] std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

/// Exponents of the first `count` unit monomials in d variables: total degree
/// ascending, then lexicographically descending (1, t1, ..., td, t1^2, t1 t2, ...).
std::vector<ExponentVector> monomial_basis_exponents(int d, std::size_t count);

/// The same monomials as polynomials in d variables.
std::vector<Polynomial> monomial_basis(int d, std::size_t count);

/// psi_N^(d): det[phi_r(x_c)] with rows r = basis monomials and columns
/// c = particles, expanded by the Leibniz sum. Throws BudgetExceeded.
Polynomial slater_determinant(int d, int N, const WorkBudget& budget = WorkBudget::from_environment());
Polynomial slater_determinant_serial(int d, int N, const WorkBudget& budget = WorkBudget::from_environment());

/// Throws BudgetExceeded with the estimated term count when (d, N) is out of budget.
void check_determinant_budget(int d, int N, const WorkBudget& budget);

/// Sum of the second partials over all variables.
Polynomial laplacian(const Polynomial& p);
Polynomial laplacian_serial(const Polynomial& p);

/// p(sigma x) where (sigma x)_i = x_{sigma(i)} on particle blocks of width d.
Polynomial apply_permutation(const Polynomial& p, int d, const Permutation& sigma);

/// True iff every adjacent transposition of particle blocks negates p.
bool is_antisymmetric(const Polynomial& p, int d);

/// Decomposition by total degree; components sum back to p.
std::map<std::int64_t, Polynomial> homogeneous_components(const Polynomial& p);

/// sum over sigma of sign(sigma) * (sigma . x^e), with particle blocks of width d.
Polynomial antisymmetrize(const ExponentVector& e, int d);

struct OracleResult {
  Dimension dim;
  std::int64_t max_degree = 0;
  /// Smallest degree with a nonzero antisymmetric harmonic homogeneous
  /// polynomial; empty when none exists up to max_degree.
  std::optional<std::int64_t> degree_found;
  std::optional<Polynomial> witness;
  /// Dimension of that solution space (0 when nothing was found).
  std::uint64_t space_dimension = 0;
};

/// For p = 0..max_degree, solves laplacian = 0 over the span of the
/// antisymmetrized degree-p monomials by exact elimination and stops at the
/// first nonzero solution space. Throws BudgetExceeded when the monomial count
/// at max_degree exceeds budget.max_oracle_monomials.
OracleResult min_antisym_harmonic_degree(int d, int N, std::int64_t max_degree,
                                         const WorkBudget& budget = WorkBudget::from_environment());

}  // namespace antisym
