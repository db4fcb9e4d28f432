#include <gtest/gtest.h>

#include "conic/builtins.hpp"
#include "conic/errors.hpp"
#include "conic/schauder.hpp"

using namespace conic;

namespace {

SchauderConfig quick(const Rational& beta, double q) {
  SchauderConfig cfg;
  cfg.params = ConeParam(beta);
  cfg.q = q;
  cfg.levels = 8;
  cfg.max_mode = 8;
  cfg.points_per_octave = 64;
  return cfg;
}

}  // namespace

TEST(Schauder, ZeroIsTrivial) {
  const SchauderConfig cfg = quick(Rational(1, 2), 0.4);
  const SchauderReport r = run_schauder(cone_field("zero", cfg.params), cfg, "zero");
  EXPECT_TRUE(r.trivial);
  EXPECT_EQ(r.constant, 0.0);
  EXPECT_EQ(r.u_sup, 0.0);
}

TEST(Schauder, LiftOfLeadingMonomial) {
  // beta = 2: rho^{1/2} cos is a T-monomial of degree 1/2 < q = 0.7.
  const SchauderConfig cfg = quick(Rational(2), 0.7);
  const SchauderReport r = run_schauder(cone_field("harmonic:1", cfg.params), cfg, "harmonic:1");
  const FPolynomial want = FPolynomial::t_monomial(cfg.params, Rational(1), 1, 1, 1, Trig::Cos, MultiIndex::zeros(0));
  const auto it = r.lift.terms().find(want.terms().begin()->first);
  ASSERT_NE(it, r.lift.terms().end());
  EXPECT_NEAR(it->second.get_d(), 1.0 / 6.0, 1e-2);
  EXPECT_FALSE(r.trivial);
  EXPECT_TRUE(std::isfinite(r.u_norm.total));
  EXPECT_GT(r.constant, 0.0);
}

TEST(Schauder, RejectsResonantOrder) {
  const SchauderConfig cfg = quick(Rational(1, 2), 1.0);
  EXPECT_THROW(run_schauder(cone_field("zero", cfg.params), cfg), ResonantOrderError);
}

TEST(Schauder, FamilySpecs) {
  const auto specs = schauder_family(0.4);
  ASSERT_EQ(specs.size(), 10u);
  const ConeParam p(Rational(1, 2));
  for (const auto& s : specs) EXPECT_NO_THROW(cone_field(s, p));
  EXPECT_NE(to_json(run_schauder(cone_field("zero", p), quick(Rational(1, 2), 0.4), "zero")).find("\"trivial\""),
            std::string::npos);
}
