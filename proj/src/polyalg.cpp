#include "antisym/polyalg.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "antisym/linalg.hpp"
#include "antisym/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace antisym {
namespace {

using Value = ExponentVector::value_type;

std::uint64_t saturating_factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > UINT64_MAX / static_cast<std::uint64_t>(k)) return UINT64_MAX;
    f *= static_cast<std::uint64_t>(k);
  }
  return f;
}

// Compositions of `total` into `parts` entries, first entry descending.
void compositions_desc(int parts, int total, std::vector<Value>& prefix, std::vector<ExponentVector>& out) {
  if (parts == 1) {
    prefix.push_back(static_cast<Value>(total));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(static_cast<Value>(first));
    compositions_desc(parts - 1, total - first, prefix, out);
    prefix.pop_back();
  }
}

// Permutation with 0-based image from its rank in lexicographic order.
std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int k = n; k >= 1; --k) {
    const std::uint64_t f = saturating_factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

int inversion_sign(const std::vector<int>& image) {
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return (inversions & 1) ? -1 : 1;
}

// Leibniz product prod_r phi_r(x_{sigma(r)}): particle sigma(r) receives row r's exponents.
void leibniz_term(const std::vector<ExponentVector>& basis, const std::vector<int>& sigma, int d,
                  ExponentVector& out) {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::size_t base = static_cast<std::size_t>(sigma[r]) * static_cast<std::size_t>(d);
    for (int k = 0; k < d; ++k) out[base + static_cast<std::size_t>(k)] = basis[r][static_cast<std::size_t>(k)];
  }
}

Polynomial determinant_prologue(int d, int N, const WorkBudget& budget, std::vector<ExponentVector>& basis) {
  validate({d, N});
  check_determinant_budget(d, N, budget);
  basis = monomial_basis_exponents(d, static_cast<std::size_t>(N));
  return Polynomial(static_cast<std::size_t>(d) * static_cast<std::size_t>(N));
}

void laplacian_term(const ExponentVector& e, const Rational& c,
                    const std::function<void(const ExponentVector&, const Rational&)>& emit) {
  ExponentVector out = e;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 2) continue;
    out[v] = static_cast<Value>(e[v] - 2);
    emit(out, c * (static_cast<long>(e[v]) * (static_cast<long>(e[v]) - 1)));
    out[v] = e[v];
  }
}

void check_blocks(const Polynomial& p, int d) {
  if (d < 1 || p.num_vars() % static_cast<std::size_t>(d) != 0)
    throw std::invalid_argument("polynomial variable count " + std::to_string(p.num_vars()) +
                                " is not divisible by d = " + std::to_string(d));
}

// Monomials whose particle blocks are strictly decreasing in lexicographic
// order; exactly one per orbit with pairwise distinct blocks.
bool blocks_strictly_decreasing(const ExponentVector& e, int d) {
  const auto w = static_cast<std::size_t>(d);
  const std::size_t n = e.size() / w;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto a = e.block(i, w);
    const auto b = e.block(i + 1, w);
    if (!std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return false;
  }
  return true;
}

void for_each_monomial(std::size_t vars, int degree, const std::function<void(const ExponentVector&)>& f) {
  ExponentVector e(vars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == vars) {
      e[v] = static_cast<Value>(left);
      f(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = static_cast<Value>(k);
      rec(v + 1, left - k);
    }
  };
  rec(0, degree);
}

}  // namespace

WorkBudget WorkBudget::from_environment() {
  WorkBudget b;
  const char* raw = std::getenv("ANTISYM_BUDGET");
  if (raw == nullptr || *raw == '\0') return b;
  const std::string s(raw);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw std::invalid_argument("ANTISYM_BUDGET must be a positive integer, got '" + s + "'");
  b.max_terms = v;
  b.max_multi_dim_vars.reset();
  return b;
}

void check_determinant_budget(int d, int N, const WorkBudget& budget) {
  const std::uint64_t estimate = saturating_factorial(N);
  const std::string who = "psi for d=" + std::to_string(d) + ", N=" + std::to_string(N);
  const std::string count = estimate == std::numeric_limits<std::uint64_t>::max()
                                ? "more than 2^64"
                                : std::to_string(estimate);
  if (estimate > budget.max_terms)
    throw BudgetExceeded(who + ": estimated " + count + " Leibniz terms (N!) exceeds budget of " +
                             std::to_string(budget.max_terms),
                         estimate, budget.max_terms);
  if (d >= 2 && budget.max_multi_dim_vars && static_cast<std::int64_t>(d) * N > *budget.max_multi_dim_vars)
    throw BudgetExceeded(who + ": estimated " + count + " Leibniz terms in " +
                             std::to_string(d * N) + " variables exceeds the default limit d*N <= " +
                             std::to_string(*budget.max_multi_dim_vars),
                         estimate, budget.max_terms);
}

std::vector<ExponentVector> monomial_basis_exponents(int d, std::size_t count) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  std::vector<ExponentVector> out;
  std::vector<Value> prefix;
  for (int p = 0; out.size() < count; ++p) {
    std::vector<ExponentVector> level;
    compositions_desc(d, p, prefix, level);
    for (auto& e : level) {
      if (out.size() == count) break;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Polynomial> monomial_basis(int d, std::size_t count) {
  std::vector<Polynomial> out;
  for (auto& e : monomial_basis_exponents(d, count)) out.push_back(Polynomial::monomial(std::move(e)));
  return out;
}

Polynomial slater_determinant_serial(int d, int N, const WorkBudget& budget) {
  std::vector<ExponentVector> basis;
  Polynomial out = determinant_prologue(d, N, budget, basis);
  std::vector<int> sigma(static_cast<std::size_t>(N));
  std::iota(sigma.begin(), sigma.end(), 0);
  ExponentVector term(out.num_vars());
  do {
    leibniz_term(basis, sigma, d, term);
    out.add_term(term, inversion_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Polynomial slater_determinant(int d, int N, const WorkBudget& budget) {
  std::vector<ExponentVector> basis;
  Polynomial out = determinant_prologue(d, N, budget, basis);
  const std::uint64_t total = saturating_factorial(N);
  using Accum = std::unordered_map<ExponentVector, long, ExponentHash>;
  std::vector<Accum> partial(static_cast<std::size_t>(std::max(1, parallel::max_threads())));

#pragma omp parallel num_threads(static_cast<int>(partial.size()))
  {
#ifdef _OPENMP
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto nth = static_cast<std::uint64_t>(omp_get_num_threads());
#else
    const std::uint64_t tid = 0, nth = 1;
#endif
    const std::uint64_t begin = total * tid / nth;
    const std::uint64_t end = total * (tid + 1) / nth;
    if (begin < end) {
      Accum& acc = partial[tid];
      std::vector<int> sigma = unrank_permutation(N, begin);
      ExponentVector term(out.num_vars());
      for (std::uint64_t k = begin; k < end; ++k) {
        leibniz_term(basis, sigma, d, term);
        acc[term] += inversion_sign(sigma);
        std::next_permutation(sigma.begin(), sigma.end());
      }
    }
  }
  for (const auto& acc : partial)
    for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

Polynomial laplacian_serial(const Polynomial& p) {
  Polynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms())
    laplacian_term(e, c, [&](const ExponentVector& x, const Rational& v) { out.add_term(x, v); });
  return out;
}

Polynomial laplacian(const Polynomial& p) {
  std::vector<const Polynomial::TermMap::value_type*> items;
  items.reserve(p.size());
  for (const auto& kv : p.terms()) items.push_back(&kv);
  using Accum = std::unordered_map<ExponentVector, Rational, ExponentHash>;
  std::vector<Accum> partial(static_cast<std::size_t>(std::max(1, parallel::max_threads())));
  const auto n = static_cast<std::ptrdiff_t>(items.size());

#pragma omp parallel num_threads(static_cast<int>(partial.size()))
  {
#ifdef _OPENMP
    Accum& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    Accum& acc = partial[0];
#endif
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& [e, c] = *items[static_cast<std::size_t>(i)];
      laplacian_term(e, c, [&](const ExponentVector& x, const Rational& v) { acc[x] += v; });
    }
  }
  Polynomial out(p.num_vars());
  for (const auto& acc : partial)
    for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

Polynomial apply_permutation(const Polynomial& p, int d, const Permutation& sigma) {
  check_blocks(p, d);
  const auto w = static_cast<std::size_t>(d);
  if (p.num_vars() != w * static_cast<std::size_t>(sigma.size()))
    throw std::invalid_argument("permutation of " + std::to_string(sigma.size()) + " particles does not match " +
                                std::to_string(p.num_vars()) + " variables with d = " + std::to_string(d));
  Polynomial out(p.num_vars());
  ExponentVector moved(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 1; i <= sigma.size(); ++i) {
      const auto src = e.block(static_cast<std::size_t>(i - 1), w);
      const std::size_t dst = static_cast<std::size_t>(sigma(i) - 1) * w;
      for (std::size_t k = 0; k < w; ++k) moved[dst + k] = src[k];
    }
    out.add_term(moved, c);
  }
  return out;
}

bool is_antisymmetric(const Polynomial& p, int d) {
  check_blocks(p, d);
  const int n = static_cast<int>(p.num_vars() / static_cast<std::size_t>(d));
  const Polynomial negated = -p;
  for (int i = 1; i < n; ++i)
    if (apply_permutation(p, d, Permutation::transposition(n, i, i + 1)) != negated) return false;
  return true;
}

std::map<std::int64_t, Polynomial> homogeneous_components(const Polynomial& p) {
  std::map<std::int64_t, Polynomial> out;
  for (const auto& [e, c] : p.terms())
    out.try_emplace(e.total_degree(), p.num_vars()).first->second.add_term(e, c);
  return out;
}

Polynomial antisymmetrize(const ExponentVector& e, int d) {
  if (d < 1 || e.size() % static_cast<std::size_t>(d) != 0)
    throw std::invalid_argument("antisymmetrize: exponent length not divisible by d");
  const auto w = static_cast<std::size_t>(d);
  const int n = static_cast<int>(e.size() / w);
  Polynomial out(e.size());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  ExponentVector moved(e.size());
  do {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const auto src = e.block(i, w);
      const std::size_t dst = static_cast<std::size_t>(sigma[i]) * w;
      for (std::size_t k = 0; k < w; ++k) moved[dst + k] = src[k];
    }
    out.add_term(moved, inversion_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

OracleResult min_antisym_harmonic_degree(int d, int N, std::int64_t max_degree, const WorkBudget& budget) {
  validate({d, N}, 2);
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  const std::size_t vars = static_cast<std::size_t>(d) * static_cast<std::size_t>(N);
  const BigInt count = binomial(max_degree + static_cast<std::int64_t>(vars) - 1, static_cast<std::int64_t>(vars) - 1);
  if (count > BigInt(std::to_string(budget.max_oracle_monomials))) {
    const std::uint64_t estimate = count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
    throw BudgetExceeded("oracle for d=" + std::to_string(d) + ", N=" + std::to_string(N) + ": " + count.get_str() +
                             " monomials of degree " + std::to_string(max_degree) + " exceed budget of " +
                             std::to_string(budget.max_oracle_monomials),
                         estimate, budget.max_oracle_monomials);
  }

  OracleResult result;
  result.dim = {d, N};
  result.max_degree = max_degree;
  for (std::int64_t p = 0; p <= max_degree; ++p) {
    std::vector<ExponentVector> reps;
    for_each_monomial(vars, static_cast<int>(p), [&](const ExponentVector& e) {
      if (blocks_strictly_decreasing(e, d)) reps.push_back(e);
    });
    if (reps.empty()) continue;

    const auto cols = static_cast<std::ptrdiff_t>(reps.size());
    std::vector<Polynomial> span(reps.size(), Polynomial(vars));
    std::vector<Polynomial> images(reps.size(), Polynomial(vars));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t j = 0; j < cols; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      span[jj] = antisymmetrize(reps[jj], d);
      images[jj] = laplacian_serial(span[jj]);
    }

    std::map<ExponentVector, std::size_t, TermOrder> row_of;
    for (const auto& img : images)
      for (const auto& [e, c] : img.terms()) row_of.try_emplace(e, row_of.size());
    std::vector<std::vector<Rational>> rows(row_of.size(), std::vector<Rational>(reps.size()));
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [e, c] : images[j].terms()) rows[row_of.at(e)][j] = c;

    std::vector<std::vector<BigInt>> kernel;
    if (rows.empty()) {
      for (std::size_t j = 0; j < reps.size(); ++j) {
        std::vector<BigInt> unit(reps.size(), BigInt(0));
        unit[j] = 1;
        kernel.push_back(std::move(unit));
      }
    } else {
      kernel = null_space(IntMatrix::from_rational_rows(rows, reps.size()));
    }
    if (kernel.empty()) continue;

    Polynomial witness(vars);
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (kernel.front()[j] != 0) witness += span[j] * Rational(kernel.front()[j]);
    if (witness.is_zero() || !laplacian(witness).is_zero() || !is_antisymmetric(witness, d) ||
        !witness.is_homogeneous() || witness.degree() != p)
      throw std::logic_error("oracle witness failed its own verification");

    result.degree_found = p;
    result.witness = std::move(witness);
    result.space_dimension = kernel.size();
    return result;
  }
  return result;
}

}  // namespace antisym
