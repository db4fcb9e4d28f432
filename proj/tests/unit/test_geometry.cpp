#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "conic/errors.hpp"
#include "conic/geometry.hpp"

using namespace conic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(ConeDistance, SpecExamples) {
  const ConeParam half(Rational(1, 2));
  EXPECT_NEAR(cone_distance({1, 0}, {1, kPi}, half), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cone_distance({1, 1.3}, {0, 0}, half), 1.0, 1e-15);
  EXPECT_NEAR(cone_distance({1, 0}, {1, kPi}, ConeParam(Rational(2))), 2.0, 1e-14);
  const ConeParam half_xi(Rational(1, 2), 1);
  EXPECT_NEAR(cone_distance({1, 0, {0.0}}, {1, kPi, {1.0}}, half_xi), std::sqrt(3.0), 1e-14);
}

TEST(ConeDistance, DimensionMismatch) {
  const ConeParam p(Rational(1), 1);
  EXPECT_THROW(cone_distance({1, 0, {0.0}}, {1, 0}, p), DimensionError);
}

TEST(ConeDistance, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, 2.0);
  std::uniform_real_distribution<double> t(0.0, 2.0 * kPi);
  for (const Rational& b : {Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1), Rational(2)}) {
    const ConeParam p(b);
    for (int i = 0; i < 2000; ++i) {
      const ConePoint x(r(rng), t(rng)), y(r(rng), t(rng)), z(r(rng), t(rng));
      const double xy = cone_distance(x, y, p);
      EXPECT_EQ(xy, cone_distance(y, x, p));
      EXPECT_LE(cone_distance(x, z, p), xy + cone_distance(y, z, p) + 1e-12);
    }
  }
}

TEST(ConeDistance, BetaOneIsEuclidean) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> r(0.0, 2.0);
  std::uniform_real_distribution<double> t(0.0, 2.0 * kPi);
  const ConeParam one(Rational(1));
  for (int i = 0; i < 1000; ++i) {
    const ConePoint a(r(rng), t(rng)), b(r(rng), t(rng));
    const double e = std::hypot(a.rho * std::cos(a.theta) - b.rho * std::cos(b.theta),
                                a.rho * std::sin(a.theta) - b.rho * std::sin(b.theta));
    EXPECT_NEAR(cone_distance(a, b, one), e, 1e-12);
  }
}

TEST(ConePoint, ApexCanonicalised) {
  const ConePoint p(0.0, 2.5);
  EXPECT_EQ(p.theta, 0.0);
  EXPECT_NEAR(ConePoint(1.0, -0.5).theta, 2.0 * kPi - 0.5, 1e-15);
}

TEST(DegreeSet, NextAbove) {
  EXPECT_EQ(next_degree_above(Rational(7, 2), DegreeSet(Rational(1, 2))), Rational(4));
  EXPECT_EQ(next_degree_above(Rational(5, 2), DegreeSet(Rational(3, 4))), Rational(8, 3));
  EXPECT_EQ(next_degree_above(Rational(0), DegreeSet(Rational(3, 4))), Rational(1));
}

TEST(DegreeSet, Contains) {
  EXPECT_TRUE(degree_set_contains(Rational(4, 3), DegreeSet(Rational(3, 4))));
  EXPECT_FALSE(degree_set_contains(Rational(1, 2), DegreeSet(Rational(3, 4))));
  EXPECT_TRUE(degree_set_contains(Rational(7), DegreeSet(Rational(1, 2))));
}

TEST(DegreeSet, NextAboveIsTightByEnumeration) {
  for (const Rational& b : {Rational(1, 3), Rational(3, 4), Rational(2), Rational(5, 7)}) {
    const DegreeSet ds(b);
    for (int num = 0; num <= 40; ++num) {
      const Rational t(num, 7);
      const Rational next = next_degree_above(t, ds);
      ASSERT_TRUE(degree_set_contains(next, ds));
      ASSERT_GT(next, t);
      for (int j = 0; j <= 10; ++j) {
        for (int k = 0; k <= 20; ++k) {
          const Rational d = Rational(j) + Rational(k) / b;
          ASSERT_FALSE(d > t && d < next) << to_string(d);
        }
      }
    }
  }
}

TEST(ScaleMap, SpecExamples) {
  const ConeParam p(Rational(1), 1);
  const ConePoint x(0.5, kPi, {1.0});
  const ConePoint z(0.25, 1.5 * kPi, {2.0});
  const ConePoint y = scale_map(x, z, p);
  EXPECT_NEAR(y.rho, 0.5, 1e-15);
  EXPECT_NEAR(y.theta, 0.5 * kPi, 1e-15);
  EXPECT_NEAR(y.xi[0], 2.0, 1e-15);
  const ConePoint ref = scale_map(x, x, p);
  EXPECT_EQ(ref, unit_reference_point(p));
  const ConePoint back = inverse_scale_map(x, ref, p);
  EXPECT_NEAR(back.rho, x.rho, 1e-15);
  EXPECT_NEAR(back.theta, x.theta, 1e-15);
  EXPECT_NEAR(back.xi[0], x.xi[0], 1e-15);
  EXPECT_THROW(scale_map(ConePoint(0.0, 0.0, {0.0}), z, p), SingularBaseError);
}

TEST(ScaleMap, ExactRoundTrip) {
  const ConeParam p(Rational(3, 4), 2);
  const ExactConePoint x{Rational(3, 7), Rational(5, 8), {Rational(1, 3), Rational(-2)}};
  const ExactConePoint z{Rational(11, 5), Rational(1, 8), {Rational(4), Rational(2, 9)}};
  EXPECT_EQ(inverse_scale_map(x, scale_map(x, z, p), p), z);
}

TEST(Pushforward, SpecExamples) {
  const ConeParam p(Rational(1, 2));
  const ConePoint x(0.5, 1.0);
  const auto sc = pushforward(x, [](const ConePoint&) { return 3.0; }, p);
  EXPECT_EQ(sc(ConePoint(1.1, 0.2)), 3.0);
  const auto sr = pushforward(x, [](const ConePoint& q) { return q.rho; }, p);
  EXPECT_NEAR(sr(ConePoint(0.9, 0.3)), 0.45, 1e-15);
  const auto f = [](const ConePoint& q) { return std::sin(q.theta) * q.rho * q.rho + q.rho; };
  EXPECT_NEAR(pushforward(x, f, p)(unit_reference_point(p)), f(x), 1e-14);
}

TEST(ParsePoint, ParsesAndRejects) {
  const ConePoint p = parse_point("0.5,1.25,2", 1);
  EXPECT_EQ(p.rho, 0.5);
  EXPECT_EQ(p.theta, 1.25);
  EXPECT_EQ(p.xi.at(0), 2.0);
  EXPECT_THROW(parse_point("0.5", 1), DimensionError);
  EXPECT_THROW(parse_point("0.5,x,1", 1), ParseError);
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(ConeParam(Rational(0)), ParameterError);
}

TEST(ConeParam, CBeta) {
  EXPECT_DOUBLE_EQ(ConeParam(Rational(1, 2)).c_beta(), 0.125);
  EXPECT_DOUBLE_EQ(ConeParam(Rational(2)).c_beta(), 0.25);
}
