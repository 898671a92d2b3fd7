#include <gtest/gtest.h>

#include <random>

#include "antisym/linalg.hpp"

using namespace antisym;

namespace {

IntMatrix make(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

bool annihilates(const IntMatrix& a, const std::vector<BigInt>& v) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += a.at(r, c) * v[c];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Echelon, RankOfKnownMatrices) {
  EXPECT_EQ(fraction_free_echelon(make({{1, 2}, {2, 4}})).rank(), 1u);
  EXPECT_EQ(fraction_free_echelon(make({{0, 1}, {1, 0}})).rank(), 2u);
  EXPECT_EQ(fraction_free_echelon(make({{2, 4, 6}, {1, 3, 5}, {3, 7, 11}})).rank(), 2u);
  EXPECT_EQ(fraction_free_echelon(IntMatrix(3, 3)).rank(), 0u);
}

TEST(NullSpace, SmallExample) {
  const auto a = make({{1, 1, 1}});
  const auto ns = null_space(a);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(annihilates(a, v));
}

TEST(NullSpace, PrimitiveWithPositiveFreeEntry) {
  const auto a = make({{2, 4, -6}});
  const auto ns = null_space(a);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    EXPECT_EQ(abs(g), 1);
    EXPECT_TRUE(annihilates(a, v));
  }
}

TEST(NullSpace, RandomRankDeficient) {
  std::mt19937 rng(41);
  for (int it = 0; it < 30; ++it) {
    const std::size_t rows = 2 + rng() % 4, cols = rows + 1 + rng() % 3;
    IntMatrix a(rows, cols);
    for (std::size_t r = 0; r + 1 < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = static_cast<long>(rng() % 21) - 10;
    // Last row duplicates a combination of the others.
    for (std::size_t c = 0; c < cols; ++c) a.at(rows - 1, c) = 3 * a.at(0, c) - 2 * a.at(rows - 2, c);
    const auto ech = fraction_free_echelon(a);
    const auto ns = null_space(a);
    EXPECT_EQ(ns.size(), cols - ech.rank());
    for (const auto& v : ns) EXPECT_TRUE(annihilates(a, v));
  }
}

TEST(IntMatrix, FromRationalRowsClearsDenominators) {
  const auto m = IntMatrix::from_rational_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(0)}}, 2);
  EXPECT_EQ(m.at(0, 0), 3);
  EXPECT_EQ(m.at(0, 1), 2);
  EXPECT_EQ(m.at(1, 0), 2);
}
