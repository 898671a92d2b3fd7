#pragma once

// Exact integer linear algebra for the minimal-degree oracle.

#include <cstddef>
#include <vector>

#include "antisym/exact.hpp"

namespace antisym {

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Scales each row by the lcm of its denominators.
  static IntMatrix from_rational_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

struct Echelon {
  IntMatrix matrix;
  std::vector<std::size_t> pivot_columns;
  [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

/// Bareiss fraction-free elimination to row echelon form. Each step picks the
/// remaining row with the smallest nonzero magnitude in the pivot column; every
/// division is exact.
Echelon fraction_free_echelon(IntMatrix a);

/// Basis of the right null space, one primitive integer vector per free
/// column (the free column's entry is positive).
std::vector<std::vector<BigInt>> null_space(const IntMatrix& a);

}  // namespace antisym
