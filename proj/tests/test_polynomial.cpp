#include <gtest/gtest.h>

#include <random>

#include "antisym/polynomial.hpp"
#include "test_helpers.hpp"

using namespace antisym;
using testing_helpers::var;

TEST(ExponentVector, Basics) {
  ExponentVector e{1, 0, 2, 3};
  EXPECT_EQ(e.size(), 4u);
  EXPECT_EQ(e.total_degree(), 6);
  EXPECT_EQ(e.block(1, 2)[0], 2);
  EXPECT_LT((ExponentVector{0, 1}), (ExponentVector{1, 0}));
  EXPECT_EQ(ExponentHash{}(ExponentVector{1, 2}), ExponentHash{}(ExponentVector{1, 2}));
}

TEST(Polynomial, DropsZeroCoefficients) {
  Polynomial p = var(2, 0) + var(2, 1);
  p.add_term(ExponentVector{1, 0}, -1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(ExponentVector{1, 0}), 0);
  EXPECT_EQ(p.coefficient(ExponentVector{0, 1}), 1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, DegreeAndHomogeneity) {
  EXPECT_EQ(Polynomial(3).degree(), -1);
  EXPECT_TRUE(Polynomial(3).is_homogeneous());
  const Polynomial p = var(2, 0) * var(2, 0) + var(2, 1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE((var(2, 0) * var(2, 1)).is_homogeneous());
}

TEST(Polynomial, Multiplication) {
  const Polynomial a = var(2, 0) + var(2, 1);
  const Polynomial b = var(2, 0) - var(2, 1);
  Polynomial expected(2);
  expected.add_term(ExponentVector{2, 0}, 1);
  expected.add_term(ExponentVector{0, 2}, -1);
  EXPECT_EQ(a * b, expected);
  EXPECT_EQ(Rational(1, 2) * a * Rational(2), a);
}

TEST(Polynomial, RingLawsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    const auto a = testing_helpers::random_polynomial(rng, 3, 3, 5);
    const auto b = testing_helpers::random_polynomial(rng, 3, 3, 5);
    const auto c = testing_helpers::random_polynomial(rng, 3, 3, 5);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Render, Conventions) {
  EXPECT_EQ(render(var(2, 1) - var(2, 0), 1), "x2_1 - x1_1");
  EXPECT_EQ(render(Polynomial(4), 2), "0");
  EXPECT_EQ(render(Polynomial::constant(2, Rational(-3, 4)), 1), "-3/4");
  Polynomial p(4);
  p.add_term(ExponentVector{2, 0, 0, 1}, Rational(3, 2));
  p.add_term(ExponentVector{0, 0, 0, 0}, 1);
  EXPECT_EQ(render(p, 2), "3/2*x1_1^2*x2_2 + 1");
  EXPECT_THROW(render(p, 3), std::invalid_argument);
}

TEST(Render, HigherDegreeFirst) {
  const Polynomial p = var(2, 0) + var(2, 1) * var(2, 1);
  EXPECT_EQ(render(p, 1), "x2_1^2 + x1_1");
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 1, 3}));
}

TEST(Permutation, SignAndProduct) {
  EXPECT_EQ(Permutation::identity(4).sign(), 1);
  EXPECT_EQ(Permutation::transposition(4, 1, 3).sign(), -1);
  EXPECT_EQ(Permutation({2, 3, 1}).sign(), 1);
  const Permutation a({2, 3, 1});
  const Permutation b({2, 1, 3});
  // (a*b)(i) = b(a(i))
  const Permutation ab = a * b;
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(ab(i), b(a(i)));
}

TEST(Permutation, SignIsMultiplicative) {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    const auto a = testing_helpers::random_permutation(rng, 6);
    const auto b = testing_helpers::random_permutation(rng, 6);
    EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
    EXPECT_EQ(a * Permutation::identity(6), a);
  }
}
