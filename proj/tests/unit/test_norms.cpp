#include <gtest/gtest.h>

#include <cmath>

#include "conic/builtins.hpp"
#include "conic/errors.hpp"
#include "conic/norms.hpp"

using namespace conic;

TEST(Ube, AbsPowerRemainderIsOne) {
  SamplingPlan plan = SamplingPlan::ube_default(2, 0.25);
  plan.centers = {{0.0, 0.0}};
  const NormReport r = ube_seminorm_rn(rn_field("abs-power:1.5"), 1.5, plan);
  ASSERT_EQ(r.centers.size(), 1u);
  EXPECT_NEAR(r.centers[0].remainder_ratio, 1.0, 1e-6);
  EXPECT_NEAR(r.centers[0].coefficient_max, 0.0, 1e-9);
}

TEST(Ube, PolynomialHasNoRemainder) {
  const SamplingPlan plan = SamplingPlan::ube_default(2, 0.25);
  const RnFunction p = [](std::span<const double> x) { return 1.0 - 2.0 * x[0] + 0.5 * x[1]; };
  EXPECT_LE(ube_seminorm_rn(p, 1.5, plan).clause("remainder"), 1e-10);
  EXPECT_THROW(ube_seminorm_rn(p, 2.0, plan), IntegerOrderError);
}

TEST(Ube, MonotoneInSamples) {
  SamplingPlan plan = SamplingPlan::ube_default(2, 0.25);
  const RnFunction f = rn_field("smooth:3");
  const double before = ube_seminorm_rn(f, 1.4, plan).total;
  SamplingPlan more = plan;
  more.probes.push_back({0.1, -0.07});
  more.centers.push_back({0.21, 0.13});
  EXPECT_GE(ube_seminorm_rn(f, 1.4, more).total, before);
}

TEST(TFit, Examples) {
  const ConeParam p(Rational(1, 2));
  const SamplingPlan plan = SamplingPlan::cone_default(p, 0.25);
  const TFit c = fit_t_polynomial(cone_field("const:2.5", p), {}, 1.5, p, plan);
  EXPECT_LE(c.remainder_ratio, 1e-12);
  EXPECT_EQ(c.P, FPolynomial::constant(p, Rational(5, 2)));

  const TFit r2 = fit_t_polynomial(cone_field("rho:2", p), {}, 1.5, p, plan);
  EXPECT_LE(r2.coefficient_max, 1e-10);
  EXPECT_LE(r2.remainder_ratio, std::sqrt(plan.delta) + 1e-12);

  const ConeParam b(Rational(3, 4), 1);
  const SamplingPlan pb = SamplingPlan::cone_default(b, 0.25);
  const TFit m = fit_t_polynomial(cone_field("monic:1", b), {0.0}, 1.5, b, pb);
  EXPECT_LE(m.remainder_ratio, 1e-9);
  EXPECT_NEAR(m.coefficient_max, 1.0, 1e-9);
}

TEST(UqNorm, ResonantOrderRejected) {
  const ConeParam p(Rational(1, 2));
  EXPECT_THROW(uq_norm(cone_field("zero", p), 2.0, p, SamplingPlan::cone_default(p)), ResonantOrderError);
  const NormReport r = uq_norm(cone_field("harmonic:1", p), 2.5, p, SamplingPlan::cone_default(p));
  EXPECT_TRUE(std::isfinite(r.total));
}

TEST(Donaldson, Examples) {
  const ConeParam p(Rational(1, 2));
  const SamplingPlan plan = SamplingPlan::cone_default(p);
  EXPECT_THROW(donaldson_norm(cone_field("zero", p), 0.5, ConeParam(Rational(2)), plan), DomainRestrictionError);
  EXPECT_THROW(donaldson_norm(cone_field("zero", p), 1.0, p, plan), DomainRestrictionError);
  const NormReport c = donaldson_norm(cone_field("const:3", p), 0.3, p, plan);
  EXPECT_NEAR(c.total, 3.0, 1e-9);
  const NormReport h = donaldson_norm(cone_field("harmonic:1", p), 0.3, p, plan);
  EXPECT_TRUE(std::isfinite(h.total));
  EXPECT_LE(std::abs(h.clause("D3:surface laplacian u")), 1e-3);
}

TEST(Holder, Examples) {
  const ConeParam p(Rational(3, 4));
  std::vector<ConePoint> pts;
  for (int i = 0; i < 12; ++i) pts.emplace_back(0.05 * (i + 1), 0.4 * i);
  EXPECT_EQ(holder_seminorm(cone_field("const:2", p), pts, 0.5, p), 0.0);

  const double alpha = 0.35;
  const ConeFunction da = [&](const ConePoint& x) { return std::pow(x.rho, alpha); };
  std::vector<double> values{0.0};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<ConePoint> anchored{ConePoint(0.0, 0.0)};
  for (int i = 1; i <= 10; ++i) {
    anchored.emplace_back(std::exp2(-i), 0.3 * i);
    values.push_back(da(anchored.back()));
    pairs.emplace_back(0, anchored.size() - 1);
  }
  const auto metric = [&](std::size_t i, std::size_t j) { return cone_distance(anchored[i], anchored[j], p); };
  EXPECT_NEAR(holder_seminorm(values, pairs, alpha, metric), 1.0, 1e-9);

  const double all = holder_seminorm(da, pts, alpha, p);
  std::vector<ConePoint> doubled = pts;
  for (int i = 0; i < 12; ++i) doubled.emplace_back(0.03 * (i + 1), 0.7 * i);
  EXPECT_GE(holder_seminorm(da, doubled, alpha, p), all);
}

TEST(SamplingPlan, JsonRoundTripAndValidation) {
  const ConeParam p(Rational(1, 2));
  SamplingPlan plan = SamplingPlan::cone_default(p, 0.125);
  const SamplingPlan back = plan_from_json(to_json(plan));
  EXPECT_EQ(to_json(back), to_json(plan));
  plan.fd_step = 0.1;
  EXPECT_THROW(plan.validate(), ParameterError);
}
