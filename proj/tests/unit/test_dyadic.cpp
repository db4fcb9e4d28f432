#include <gtest/gtest.h>

#include <cmath>

#include "conic/dyadic.hpp"
#include "conic/errors.hpp"

using namespace conic;

namespace {

DyadicConfig small_config(const Rational& beta, double q) {
  DyadicConfig cfg;
  cfg.params = ConeParam(beta);
  cfg.q = q;
  cfg.levels = 8;
  cfg.max_mode = 4;
  cfg.points_per_octave = 64;
  return cfg;
}

}  // namespace

TEST(RestrictToAnnulus, Examples) {
  const ConeFunction one = [](const ConePoint&) { return 1.0; };
  const ConeFunction f0 = restrict_to_annulus(one, 0);
  EXPECT_EQ(f0(ConePoint(0.75, 1.0)), 1.0);
  EXPECT_EQ(f0(ConePoint(0.4, 1.0)), 0.0);
  EXPECT_EQ(f0(ConePoint(1.0, 0.0)), 1.0);
  EXPECT_EQ(f0(ConePoint(0.5, 0.0)), 0.0);

  const int L = 6;
  for (double rho = 0.02; rho <= 1.0; rho *= 1.13) {
    double sum = 0.0;
    for (int l = 0; l < L; ++l) sum += restrict_to_annulus(one, l)(ConePoint(rho, 0.3));
    EXPECT_EQ(sum, 1.0) << rho;
  }
  EXPECT_EQ(restrict_to_annulus(one, 1, 2.0)(ConePoint(0.75, 0.0)), 1.0);
}

TEST(Construct, ZeroInput) {
  const DyadicSolution sol = construct([](const ConePoint&) { return 0.0; }, small_config(Rational(1, 2), 0.5));
  EXPECT_EQ(sol.u.max_abs(), 0.0);
  EXPECT_EQ(sol.seminorm_ratio, 0.0);
  for (const auto& d : level_diagnostics(sol)) {
    EXPECT_EQ(d.inner, 0.0);
    EXPECT_EQ(d.annulus, 0.0);
    EXPECT_EQ(d.outer, 0.0);
  }
}

TEST(Construct, ResonantOrdersRejected) {
  const ConeFunction zero = [](const ConePoint&) { return 0.0; };
  EXPECT_THROW(construct(zero, small_config(Rational(1, 2), 1.0)), ResonantOrderError);
  EXPECT_THROW(construct(zero, small_config(Rational(3, 4), 4.0 / 3.0)), ResonantOrderError);
  EXPECT_NO_THROW(construct(zero, small_config(Rational(3, 4), 0.4)));
}

TEST(SolveLevel, ZeroAndLocality) {
  const DyadicConfig cfg = small_config(Rational(1), 0.5);
  const ModeField w = solve_level([](const ConePoint&) { return 0.0; }, 2, cfg);
  EXPECT_EQ(w.max_abs(), 0.0);
  const ConeFunction spill = [](const ConePoint& p) { return p.rho < 0.6 ? 1.0 : 0.0; };
  EXPECT_THROW(solve_level(spill, 0, cfg), SupportError);
}

TEST(SolveLevel, ModeOneResidual) {
  DyadicConfig cfg = small_config(Rational(1, 2), 0.5);
  cfg.points_per_octave = 256;
  const ConeFunction f = [](const ConePoint& p) { return std::sqrt(p.rho) * std::cos(p.theta); };
  const ConeFunction f2 = restrict_to_annulus(f, 2);
  const ModeField w = solve_level(f2, 2, cfg);
  const ConeFunction wf = as_function(w);
  const ConeFunction zero = [](const ConePoint&) { return 0.0; };
  // inside A_2 = (1/8, 1/4]
  for (double rho : {0.15, 0.18, 0.22}) {
    EXPECT_LE(std::abs(laplacian_residual(wf, f, ConePoint(rho, 0.4), 1e-3, cfg.params)), 1e-5);
  }
  // outside the annulus w is a combination of rho^{+-2} cos; at step 1e-3 the
  // stencil error on those alone is ~1.4e-7, so the harmonic check uses half the step
  for (double rho : {0.05, 0.08, 0.4, 0.7}) {
    EXPECT_LE(std::abs(laplacian_residual(wf, zero, ConePoint(rho, 0.4), 5e-4, cfg.params)), 1e-7);
  }
}

TEST(Construct, ExactParticularSolution) {
  // beta = 1/2, f = rho^{1/2} cos: particular solution rho^{5/2} cos / (25/4 - 4).
  DyadicConfig cfg = small_config(Rational(1, 2), 0.5);
  cfg.levels = 10;
  const ConeFunction f = [](const ConePoint& p) { return std::sqrt(p.rho) * std::cos(p.theta); };
  const DyadicSolution sol = construct(f, cfg);
  EXPECT_LE(sol.max_residual, 1e-4);
  const double c = 1.0 / 2.25;
  double worst = 0.0;
  for (double rho = 1.0 / 128.0; rho <= 0.25; rho *= 1.25) {
    for (double t : {0.0, 1.0, 2.5}) {
      const double exact = c * std::pow(rho, 2.5) * std::cos(t);
      worst = std::max(worst, std::abs(synthesize(sol.u, ConePoint(rho, t)) - exact) / std::pow(rho, 2.5));
    }
  }
  EXPECT_LT(worst, 1.0);
}

TEST(Construct, Linearity) {
  DyadicConfig cfg = small_config(Rational(3, 4), 0.4);
  const ConeFunction f = [](const ConePoint& p) { return std::pow(p.rho, 0.4) * std::cos(p.theta); };
  const ConeFunction g = [](const ConePoint& p) { return std::pow(p.rho, 0.9) * std::sin(2 * p.theta); };
  const ConeFunction fg = [&](const ConePoint& p) { return 2.0 * f(p) - 3.0 * g(p); };
  const DyadicSolution a = construct(f, cfg), b = construct(g, cfg), ab = construct(fg, cfg);
  ModeField mix = a.u.scaled(2.0);
  mix -= b.u.scaled(3.0);
  mix -= ab.u;
  EXPECT_LE(mix.max_abs(), 1e-12 * std::max(1.0, ab.u.max_abs()));
}
