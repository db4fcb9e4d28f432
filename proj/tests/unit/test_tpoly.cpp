#include <gtest/gtest.h>

#include <random>

#include "conic/errors.hpp"
#include "conic/tpoly.hpp"

using namespace conic;

namespace {

const ConeParam kHalf(Rational(1, 2));

FPolynomial lead_cos(const ConeParam& p, long j = 0) {
  return FPolynomial::t_monomial(p, Rational(1), j, 1, 1, Trig::Cos, MultiIndex::zeros(p.xi_dim()));
}

FPolynomial xi_power(const ConeParam& p, MultiIndex sigma, const Rational& c = Rational(1)) {
  return FPolynomial::monomial(p, c, Rational(0), 0, Trig::Cos, std::move(sigma));
}

FPolynomial rho_power(const ConeParam& p, const Rational& gamma, const Rational& c = Rational(1)) {
  return FPolynomial::monomial(p, c, gamma, 0, Trig::Cos, MultiIndex::zeros(p.xi_dim()));
}

}  // namespace

TEST(Degree, Examples) {
  EXPECT_EQ(degree(lead_cos(kHalf, 1)), Rational(4));
  const ConeParam two_xi(Rational(2, 3), 2);
  EXPECT_EQ(degree(xi_power(two_xi, MultiIndex{2, 1})), Rational(3));
  EXPECT_THROW(degree(FPolynomial(kHalf)), UndefinedDegreeError);

  const ConeParam p(Rational(3, 4), 1);
  const std::vector<FPolynomial> monic{
      FPolynomial::constant(p, Rational(1)),
      lead_cos(p),
      FPolynomial::t_monomial(p, Rational(1), 0, 1, 1, Trig::Sin, MultiIndex{0}),
      rho_power(p, Rational(2)),
      xi_power(p, MultiIndex{1}),
      xi_power(p, MultiIndex{2})};
  const std::vector<Rational> want{Rational(0), Rational(4, 3), Rational(4, 3), Rational(2), Rational(1), Rational(2)};
  for (std::size_t i = 0; i < monic.size(); ++i) {
    EXPECT_TRUE(is_t_polynomial(monic[i]));
    EXPECT_EQ(degree(monic[i]), want[i]) << i;
  }
}

TEST(Multiply, ProductToSum) {
  const FPolynomial sq = multiply(lead_cos(kHalf), lead_cos(kHalf));
  FPolynomial want = FPolynomial::t_monomial(kHalf, Rational(1, 2), 0, 2, 0, Trig::Cos, MultiIndex::zeros(0));
  want += FPolynomial::t_monomial(kHalf, Rational(1, 2), 0, 2, 2, Trig::Cos, MultiIndex::zeros(0));
  EXPECT_EQ(sq, want);
  EXPECT_EQ(degree(sq), Rational(4));

  const ConeParam p(Rational(1), 1);
  EXPECT_EQ(multiply(xi_power(p, MultiIndex{1}), xi_power(p, MultiIndex{1})), xi_power(p, MultiIndex{2}));
  const FPolynomial f = lead_cos(p) + xi_power(p, MultiIndex{3}, Rational(-2, 5));
  EXPECT_EQ(multiply(FPolynomial::constant(p, Rational(1)), f), f);
}

TEST(Multiply, ClosureOnRandomPairs) {
  std::mt19937_64 rng(11);
  const std::vector<Rational> betas{Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(2)};
  for (int i = 0; i < 500; ++i) {
    const ConeParam p(betas[i % betas.size()], i % 3);
    const FPolynomial a = random_t_polynomial(p, rng, Rational(3), 2, 4);
    const FPolynomial b = random_t_polynomial(p, rng, Rational(3), 2, 4);
    const FPolynomial ab = multiply(a, b);
    ASSERT_TRUE(is_t_polynomial(ab)) << to_display_string(a) << " * " << to_display_string(b);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ(degree(ab), degree(a) + degree(b));
  }
}

TEST(Laplacian, Examples) {
  EXPECT_TRUE(laplacian(lead_cos(kHalf)).is_zero());
  EXPECT_TRUE(laplacian(lead_cos(ConeParam(Rational(3, 7)))).is_zero());
  EXPECT_EQ(laplacian(rho_power(kHalf, Rational(2))), FPolynomial::constant(kHalf, Rational(4)));
  const ConeParam p1(Rational(1), 1);
  EXPECT_EQ(laplacian(xi_power(p1, MultiIndex{2})), FPolynomial::constant(p1, Rational(2)));

  // rho^{2+1/beta} cos -> (4 + 4/beta) rho^{1/beta} cos; beta = 1/2 gives 12 rho^2 cos.
  EXPECT_EQ(laplacian(lead_cos(kHalf, 1)), lead_cos(kHalf).scaled(Rational(12)));
  const ConeParam b34(Rational(3, 4));
  EXPECT_EQ(laplacian(lead_cos(b34, 1)), lead_cos(b34).scaled(Rational(4) + Rational(16, 3)));

  // rho^{2/beta}: image rho^{2/beta - 2} needs j = -1 at beta = 2/3... flagged non-T.
  const ConeParam b(Rational(2, 3));
  const FPolynomial img = laplacian(FPolynomial::t_monomial(b, Rational(1), 0, 2, 0, Trig::Cos, MultiIndex::zeros(0)));
  ASSERT_EQ(img.size(), 1u);
  EXPECT_EQ(img.terms().begin()->second, Rational(9));
  EXPECT_EQ(img.terms().begin()->first.gamma, Rational(1));
  EXPECT_FALSE(is_t_polynomial(img));
  const auto flags = validity_flags(img);
  ASSERT_EQ(flags.size(), 1u);
  EXPECT_FALSE(flags[0].second);
}

TEST(SolvePoisson, Examples) {
  EXPECT_EQ(solve_poisson(FPolynomial::constant(kHalf, Rational(1))), rho_power(kHalf, Rational(2), Rational(1, 4)));

  const ConeParam p(Rational(1), 1);
  const FPolynomial f = xi_power(p, MultiIndex{2});
  const FPolynomial u = solve_poisson(f);
  FPolynomial want = FPolynomial::monomial(p, Rational(1, 4), Rational(2), 0, Trig::Cos, MultiIndex{2});
  want += rho_power(p, Rational(4), Rational(-1, 32));
  EXPECT_EQ(u, want);
  EXPECT_EQ(laplacian(u), f);
  EXPECT_DOUBLE_EQ(evaluate(u, ConePoint(1.0, 0.0, {2.0})), 31.0 / 32.0);

  EXPECT_EQ(solve_poisson(lead_cos(kHalf)), lead_cos(kHalf, 1).scaled(Rational(1, 12)));
  EXPECT_THROW(solve_poisson(rho_power(kHalf, Rational(1, 3))), ValidityError);
}

TEST(SolvePoisson, RightInverseAndBound) {
  std::mt19937_64 rng(5);
  const std::vector<Rational> betas{Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(2)};
  for (int i = 0; i < 60; ++i) {
    const ConeParam p(betas[i % 4], 1 + i % 2);
    const FPolynomial f = random_t_polynomial(p, rng, Rational(6), 4);
    const PoissonLift lift = solve_poisson_detailed(f);
    ASSERT_EQ(laplacian(lift.u), f);
    EXPECT_TRUE(is_t_polynomial(lift.u));
    EXPECT_LE(lift.u.max_abs_coefficient(), lift.coefficient_bound * f.max_abs_coefficient());
  }
}

TEST(Truncate, Examples) {
  const FPolynomial p = rho_power(kHalf, Rational(2)) + rho_power(kHalf, Rational(4));
  EXPECT_EQ(truncate_below(p, Rational(3)), rho_power(kHalf, Rational(2)));
  EXPECT_TRUE(truncate_below(p, Rational(0)).is_zero());

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(-9, 9);
  const ConeParam b(Rational(3, 4));
  for (int i = 0; i < 40; ++i) {
    FPolynomial h(b);
    for (long k = 0; k <= 4; ++k) {
      h += FPolynomial::t_monomial(b, Rational(coeff(rng), 4), 0, k, static_cast<int>(k), Trig::Cos, MultiIndex::zeros(0));
      h += FPolynomial::t_monomial(b, Rational(coeff(rng), 3), 0, k, static_cast<int>(k), Trig::Sin, MultiIndex::zeros(0));
    }
    ASSERT_TRUE(laplacian(h).is_zero());
    for (int num = 0; num <= 14; ++num) {
      EXPECT_TRUE(laplacian(truncate_below(h, Rational(num, 2))).is_zero());
    }
  }
}

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(evaluate(rho_power(kHalf, Rational(2)), ConePoint(2.0, 0.0)), 4.0);
  EXPECT_NEAR(evaluate(lead_cos(kHalf), ConePoint(1.0, std::numbers::pi)), -1.0, 1e-15);
  EXPECT_EQ(evaluate(FPolynomial::constant(kHalf, Rational(3)), ConePoint(0.0, 0.0)), 3.0);
  EXPECT_EQ(evaluate(rho_power(kHalf, Rational(1, 3)), ConePoint(0.0, 0.0)), 0.0);
  EXPECT_THROW(evaluate(rho_power(kHalf, Rational(-1)), ConePoint(0.0, 0.0)), SingularEvaluationError);
}

TEST(ScaledMonomialNorm, Examples) {
  const ConeParam p(Rational(1, 2));
  EXPECT_NEAR(scaled_monomial_norm(FPolynomial::constant(p, Rational(1)), ConePoint(0.3, 1.0), 0), 1.0, 1e-14);
  const double r = 0.25;
  const double sup = scaled_monomial_norm(rho_power(p, Rational(2)), ConePoint(r, 0.0), 0);
  EXPECT_LE(sup, std::pow(r * (1.0 + p.c_beta()), 2) + 1e-12);
  EXPECT_GE(sup, r * r);
  EXPECT_THROW(scaled_monomial_norm(rho_power(p, Rational(2)), ConePoint(0.0, 0.0), 0), SingularBaseError);
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(3);
  const ConeParam p(Rational(3, 4), 2);
  for (int i = 0; i < 50; ++i) {
    const FPolynomial f = random_t_polynomial(p, rng, Rational(5), 3);
    EXPECT_EQ(from_json(to_json(f)), f);
  }
  const FPolynomial odd = rho_power(p, Rational(1, 5), Rational(-7, 3));
  EXPECT_EQ(from_json(to_json(odd)), odd);
  EXPECT_THROW(from_json("{\"beta\":"), ParseError);
}
