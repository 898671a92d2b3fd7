#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables of a full-space polynomial are laid out particle-major: variable
// (i-1)*d + (k-1) is coordinate k of particle i (both 1-based in rendered
// names x{i}_{k}).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "antisym/exact.hpp"

namespace antisym {

/// Multi-index of fixed length.
class ExponentVector {
 public:
  using value_type = std::uint16_t;

  explicit ExponentVector(std::size_t num_vars) : e_(num_vars, 0) {}
  ExponentVector(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExponentVector(std::vector<value_type> e) : e_(std::move(e)) {}

  [[nodiscard]] std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  [[nodiscard]] std::span<const value_type> values() const { return e_; }
  [[nodiscard]] std::span<const value_type> block(std::size_t index, std::size_t width) const {
    return std::span<const value_type>(e_).subspan(index * width, width);
  }
  [[nodiscard]] std::int64_t total_degree() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the entries.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<value_type> e_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Canonical term order: higher total degree first, then lexicographically
/// ascending exponents. This lists terms from the top of the graded order
/// used for single-particle monomials (degree ascending, lex descending)
/// down to the bottom, so psi for d = 1, N = 2 renders as "x2_1 - x1_1".
struct TermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, TermOrder>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial monomial(ExponentVector e, const Rational& c = 1);

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Coefficient of e (zero when absent).
  [[nodiscard]] Rational coefficient(const ExponentVector& e) const;

  /// Adds c to the coefficient of e, erasing the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  /// Largest total degree of a term; -1 for the zero polynomial.
  [[nodiscard]] std::int64_t degree() const;
  /// The zero polynomial counts as homogeneous.
  [[nodiscard]] bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// Renders in canonical term order with variables x{i}_{k} for particle i,
/// coordinate k, e.g. "x2_1 - x1_1" or "3/2*x1_1^2*x2_2 + 1". The zero
/// polynomial renders as "0". num_vars must be divisible by d.
std::string render(const Polynomial& p, int d);

/// Element of S_N stored as its image sequence (1-based).
class Permutation {
 public:
  /// Throws std::invalid_argument unless image is a bijection on {1..N}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Swaps i and j (1-based).
  static Permutation transposition(int n, int i, int j);

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& image() const { return image_; }
  /// +1 or -1 from inversion parity.
  [[nodiscard]] int sign() const;

  /// Product in application order: (a * b)(i) = b(a(i)), so that applying a
  /// then b to a polynomial equals applying a * b.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace antisym
