#include "antisym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace antisym {

IntMatrix IntMatrix::from_rational_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rational matrix");
    BigInt scale = 1;
    for (const auto& q : rows[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational scaled = rows[r][c] * scale;
      m.at(r, c) = scaled.get_num();
    }
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Echelon fraction_free_echelon(IntMatrix a) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      if (best == a.rows() || mpz_cmpabs(a.at(i, c).get_mpz_t(), a.at(best, c).get_mpz_t()) < 0) best = i;
    }
    if (best == a.rows()) continue;
    a.swap_rows(r, best);
    const BigInt& piv = a.at(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const BigInt lead = a.at(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        t = piv * a.at(i, j) - lead * a.at(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss step produced an inexact division");
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::vector<std::vector<BigInt>> null_space(const IntMatrix& a) {
  const Echelon ech = fraction_free_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t k = ech.rank(); k-- > 0;) {
      const std::size_t pc = ech.pivot_columns[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (x[j] != 0 && ech.matrix.at(k, j) != 0) acc += Rational(ech.matrix.at(k, j)) * x[j];
      x[pc] = -acc / Rational(ech.matrix.at(k, pc));
    }
    BigInt scale = 1;
    for (const auto& q : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> v(n);
    BigInt g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational s = x[j] * scale;
      v[j] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    if (g > 1)
      for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace antisym
