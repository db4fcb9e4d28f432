#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conic/errors.hpp"
#include "conic/modegrid.hpp"

using namespace conic;

namespace {
const ConeParam kOne(Rational(1));
const RadialGrid kGrid(1.0 / 64.0, 1.0, 32);

double worst(const std::vector<double>& v, const std::function<double(double)>& want, const RadialGrid& g) {
  double e = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) e = std::max(e, std::abs(v[i] - want(g[i])));
  return e;
}
}  // namespace

TEST(RadialGrid, EndsAreNodes) {
  EXPECT_EQ(kGrid.rho_min(), 1.0 / 64.0);
  EXPECT_EQ(kGrid.rho_max(), 1.0);
  EXPECT_EQ(kGrid.size(), 6u * 32u + 1u);
  EXPECT_NEAR(kGrid.ratio(), std::exp2(1.0 / 32.0), 1e-14);
  EXPECT_THROW(RadialGrid(1.0, 0.5, 8), GridError);
}

TEST(Analyze, Examples) {
  const ModeField c2 = analyze([](const ConePoint& p) { return std::cos(2 * p.theta); }, kOne, kGrid, 4);
  for (const auto& [key, v] : c2.modes()) {
    const double target = (key.m == 2 && key.trig == Trig::Cos) ? 1.0 : 0.0;
    EXPECT_LE(worst(v, [&](double) { return target; }, kGrid), 1e-13);
  }
  const ModeField one = analyze([](const ConePoint&) { return 1.0; }, kOne, kGrid, 2);
  EXPECT_LE(worst(one.mode(0, Trig::Cos), [](double) { return 1.0; }, kGrid), 1e-13);
  const ModeField rs = analyze([](const ConePoint& p) { return p.rho * std::sin(p.theta); }, kOne, kGrid, 3);
  EXPECT_LE(worst(rs.mode(1, Trig::Sin), [](double r) { return r; }, kGrid), 1e-13);
  EXPECT_LE(worst(rs.mode(1, Trig::Cos), [](double) { return 0.0; }, kGrid), 1e-13);
  EXPECT_THROW(analyze([](const ConePoint&) { return 0.0; }, kOne, kGrid, -1), ParameterError);
}

TEST(Synthesize, RoundTripBandLimited) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int M = 8;
  std::vector<double> a(M + 1), b(M + 1);
  for (int m = 0; m <= M; ++m) {
    a[m] = u(rng);
    b[m] = m == 0 ? 0.0 : u(rng);
  }
  const ConeFunction f = [&](const ConePoint& p) {
    double s = 0.0;
    for (int m = 0; m <= M; ++m) s += std::pow(p.rho, m) * (a[m] * std::cos(m * p.theta) + b[m] * std::sin(m * p.theta));
    return s;
  };
  const ModeField mf = analyze(f, kOne, kGrid, M);
  const ModeField again = analyze(as_function(mf), kOne, kGrid, M);
  ModeField diff = again;
  diff -= mf;
  EXPECT_LE(diff.max_abs(), 1e-12);
  for (std::size_t i = 0; i < kGrid.size(); i += 17) {
    const ConePoint p(kGrid[i], 0.3 * static_cast<double>(i));
    EXPECT_NEAR(synthesize(mf, p), f(p), 1e-12);
  }
  EXPECT_THROW(synthesize(mf, ConePoint(2.0, 0.0)), ExtrapolationError);
}

TEST(Synthesize, LinearModeExactBetweenNodes) {
  ModeField mf(kOne, kGrid, 0);
  auto& c0 = mf.mode(0, Trig::Cos);
  for (std::size_t i = 0; i < kGrid.size(); ++i) c0[i] = 3.0 * kGrid[i] - 1.0;
  const double mid = 0.5 * (kGrid[40] + kGrid[41]);
  EXPECT_NEAR(synthesize(mf, ConePoint(mid, 1.0)), 3.0 * mid - 1.0, 1e-14);
}

TEST(Residual, Examples) {
  const ConeParam half(Rational(1, 2));
  const ConeFunction r2 = [](const ConePoint& p) { return p.rho * p.rho; };
  const ConeFunction four = [](const ConePoint&) { return 4.0; };
  EXPECT_LE(std::abs(laplacian_residual(r2, four, ConePoint(0.5, 0.7), 1e-3, half)), 1e-6);

  const ConeFunction h = [](const ConePoint& p) { return p.rho * p.rho * std::cos(p.theta); };
  const ConeFunction zero = [](const ConePoint&) { return 0.0; };
  EXPECT_LE(std::abs(laplacian_residual(h, zero, ConePoint(0.5, 0.7), 1e-3, half)), 1e-8);

  const ConeFunction r4 = [](const ConePoint& p) { return std::pow(p.rho, 4); };
  const ConeFunction r2x16 = [](const ConePoint& p) { return 16.0 * p.rho * p.rho; };
  EXPECT_LE(std::abs(laplacian_residual(r4, r2x16, ConePoint(0.5, 2.0), 1e-3, half)), 1e-5);

  EXPECT_THROW(laplacian_residual(r2, four, ConePoint(1e-3, 0.0), 1e-3, half), DomainError);
}

TEST(Residual, SecondOrderConvergence) {
  const ConeFunction u = [](const ConePoint& p) { return std::exp(p.rho) * std::cos(p.theta); };
  const ConeFunction zero = [](const ConePoint&) { return 0.0; };
  const ConePoint x(0.6, 0.4);
  const double coarse = std::abs(laplacian_residual(u, zero, x, 2e-2, kOne) - laplacian_residual(u, zero, x, 1e-5, kOne));
  const double fine = std::abs(laplacian_residual(u, zero, x, 1e-2, kOne) - laplacian_residual(u, zero, x, 1e-5, kOne));
  EXPECT_GT(coarse / fine, 3.5);
  EXPECT_LT(coarse / fine, 4.5);
}

TEST(ModeField, CsvRoundTrip) {
  const RadialGrid g(0.25, 1.0, 4);
  const ModeField mf = analyze([](const ConePoint& p) { return p.rho + std::sin(2 * p.theta) / 3.0; }, kOne, g, 2);
  const ModeField back = mode_field_from_csv(to_csv(mf), kOne);
  ModeField diff = back;
  diff -= mf;
  EXPECT_LE(diff.max_abs(), 1e-15);
}
