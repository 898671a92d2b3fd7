#pragma once

#include <algorithm>
#include <random>

#include "antisym/polyalg.hpp"
#include "antisym/polynomial.hpp"

namespace testing_helpers {

inline antisym::Polynomial var(std::size_t num_vars, std::size_t index, long coeff = 1) {
  antisym::ExponentVector e(num_vars);
  e[index] = 1;
  return antisym::Polynomial::monomial(e, coeff);
}

// Random sparse polynomial with small rational coefficients.
inline antisym::Polynomial random_polynomial(std::mt19937& rng, std::size_t num_vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  antisym::Polynomial p(num_vars);
  for (int t = 0; t < terms; ++t) {
    antisym::ExponentVector e(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) e[i] = static_cast<std::uint16_t>(exp(rng));
    p.add_term(e, antisym::fraction(num(rng), den(rng)));
  }
  return p;
}

inline antisym::Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return antisym::Permutation(img);
}

// Places a d-variable monomial into block `particle` of a d*N-variable vector.
inline antisym::Polynomial lift(const antisym::ExponentVector& single, int d, int N, int particle) {
  antisym::ExponentVector e(static_cast<std::size_t>(d * N));
  for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(particle * d + k)] = single[static_cast<std::size_t>(k)];
  return antisym::Polynomial::monomial(e);
}

// Determinant by Laplace expansion along the first row.
inline antisym::Polynomial cofactor_det(const std::vector<std::vector<antisym::Polynomial>>& m, std::size_t num_vars) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  antisym::Polynomial sum(num_vars);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<antisym::Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<antisym::Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const auto term = m[0][c] * cofactor_det(minor, num_vars);
    if (c % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

inline antisym::Polynomial cofactor_slater(int d, int N) {
  const auto basis = antisym::monomial_basis_exponents(d, static_cast<std::size_t>(N));
  std::vector<std::vector<antisym::Polynomial>> m;
  for (int r = 0; r < N; ++r) {
    std::vector<antisym::Polynomial> row;
    for (int c = 0; c < N; ++c) row.push_back(lift(basis[static_cast<std::size_t>(r)], d, N, c));
    m.push_back(std::move(row));
  }
  return cofactor_det(m, static_cast<std::size_t>(d * N));
}

}  // namespace testing_helpers
