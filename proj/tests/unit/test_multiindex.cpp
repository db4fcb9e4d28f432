#include <gtest/gtest.h>

#include <cmath>

#include "conic/multiindex.hpp"

using namespace conic;

namespace {

template <class S>
S eval_q(const FieldFunction<S>& f, const MultiIndex& e, std::vector<S> h, std::vector<S> y) {
  return diff_quotient<S>(e, h, f, y);
}

}  // namespace

TEST(DiffQuotient, SpecExamples) {
  const FieldFunction<Rational> id = [](std::span<const Rational> x) { return x[0]; };
  const FieldFunction<Rational> sq = [](std::span<const Rational> x) { return Rational(x[0] * x[0]); };
  const FieldFunction<Rational> xy = [](std::span<const Rational> x) { return Rational(x[0] * x[1]); };
  EXPECT_EQ(eval_q(id, MultiIndex{1}, {Rational(3, 7)}, {Rational(5)}), Rational(1));
  EXPECT_EQ(eval_q(sq, MultiIndex{2}, {Rational(-2, 3)}, {Rational(1, 4)}), Rational(2));
  EXPECT_EQ(eval_q(xy, MultiIndex{1, 1}, {Rational(1, 2), Rational(3)}, {Rational(1), Rational(-1)}), Rational(1));
  const std::vector<Rational> h{Rational(1, 5), Rational(2)};
  const std::vector<Rational> y{Rational(0), Rational(1, 3)};
  EXPECT_EQ(diff_quotient_recursive<Rational>(MultiIndex{1, 1}, h, xy, y), Rational(1));
}

TEST(DiffQuotient, DoubleAndErrors) {
  const FieldFunction<double> cube = [](std::span<const double> x) { return x[0] * x[0] * x[0]; };
  std::vector<double> h{1e-2}, y{0.3};
  EXPECT_NEAR(diff_quotient<double>(MultiIndex{3}, h, cube, y), 6.0, 1e-8);
  std::vector<double> zero{0.0};
  EXPECT_THROW(diff_quotient<double>(MultiIndex{1}, zero, cube, y), InvalidIncrementError);
  std::vector<double> two{0.1, 0.1};
  EXPECT_THROW(diff_quotient<double>(MultiIndex{1}, two, cube, y), DimensionError);
}

TEST(QSum, SpecExamples) {
  EXPECT_EQ(q_sum(MultiIndex{1, 3}, MultiIndex{2, 0}), Rational(0));
  EXPECT_EQ(q_sum(MultiIndex{1}, MultiIndex{1}), Rational(1));
  EXPECT_EQ(q_sum(MultiIndex{2}, MultiIndex{2}), Rational(-2));
  EXPECT_EQ(q_sum_shifted(MultiIndex{1, 3}, MultiIndex{2, 0}), Rational(0));
}

TEST(QSum, ShiftedAgreesWhenBelow) {
  for (const auto& eps : all_multi_indices(2, 5)) {
    for (const auto& sigma : all_multi_indices(2, 5)) {
      if (sigma[0] < eps[0] || sigma[1] < eps[1]) {
        EXPECT_EQ(q_sum(sigma, eps), q_sum_shifted(sigma, eps));
      }
    }
  }
}

TEST(OmegaContains, SpecExamples) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<double> a{s, s}, b{1.0, 0.0}, c{1.0, 0.3}, z{0.0, 0.0};
  EXPECT_TRUE(omega_contains(a));
  EXPECT_FALSE(omega_contains(b));
  EXPECT_FALSE(omega_contains(c));
  EXPECT_THROW(omega_contains(z), InvalidIncrementError);
}

TEST(Annihilation, SpecExamples) {
  const std::vector<Rational> h1{Rational(1, 3)};
  DensePolynomial y(1);
  y.add_term(MultiIndex{1}, Rational(1));
  EXPECT_TRUE(annihilation_check(y, MultiIndex{2}, h1));

  const std::vector<Rational> h2{Rational(1, 2), Rational(-3)};
  DensePolynomial x2y(2);
  x2y.add_term(MultiIndex{2, 1}, Rational(1));
  EXPECT_TRUE(annihilation_check(x2y, MultiIndex{1, 2}, h2));

  DensePolynomial x2(2);
  x2.add_term(MultiIndex{2, 0}, Rational(1));
  EXPECT_FALSE(annihilation_check(x2, MultiIndex{2, 0}, h2));
  const DensePolynomial q = diff_quotient_polynomial(x2, MultiIndex{2, 0}, h2);
  DensePolynomial two(2);
  two.add_term(MultiIndex{0, 0}, Rational(2));
  EXPECT_EQ(q, two);
}

TEST(DensePolynomial, ShiftAndEvaluate) {
  DensePolynomial p(2);
  p.add_term(MultiIndex{2, 1}, Rational(3));
  p.add_term(MultiIndex{0, 0}, Rational(-1));
  const std::vector<Rational> off{Rational(1), Rational(1, 2)};
  const std::vector<Rational> at{Rational(2), Rational(-1)};
  const std::vector<Rational> moved{Rational(3), Rational(-1, 2)};
  EXPECT_EQ(p.shifted(off).evaluate(std::span<const Rational>(at)), p.evaluate(std::span<const Rational>(moved)));
  EXPECT_EQ(p.degree(), 3);
}
