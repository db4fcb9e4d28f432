// Estimator checks: space comparability, UBE cross-bound, end-to-end Schauder, negative controls.
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "conic/builtins.hpp"
#include "conic/dyadic.hpp"
#include "conic/errors.hpp"
#include "conic/expansion.hpp"
#include "conic/norms.hpp"
#include "conic/schauder.hpp"
#include "verify.hpp"

namespace conic::verify {

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<RnPoint> disc_points(double radius) {
  std::vector<RnPoint> pts{{0.0, 0.0}};
  for (int i = 1; i <= 5; ++i) {
    const double r = radius * i / 5.0;
    for (int a = 0; a < 12; ++a) {
      const double t = 2.0 * std::numbers::pi * a / 12.0;
      pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
  }
  return pts;
}

template <class Error, class Fn>
bool throws(Fn&& fn) {
  try {
    fn();
  } catch (const Error&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace

CheckResult check_ube_cross_bound(const Options&) {
  const double q = 1.5;
  const double delta = 0.25;
  const double inner = 0.5;
  const SamplingPlan plan = SamplingPlan::ube_default(2, delta, inner);
  const auto small = disc_points(inner);
  const auto big = disc_points(inner + delta);
  auto rows = nlohmann::ordered_json::array();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const std::string spec = "smooth:" + std::to_string(i);
    const RnFunction f = rn_field(spec);
    const double ube = ube_seminorm_rn(f, q, plan).total;
    const double c_big = ckalpha_norm_rn(f, big, 1, q - 1.0, 1e-3);
    const double c_small = ckalpha_norm_rn(f, small, 1, q - 1.0, 1e-3);
    const double forward = ube / c_big;
    const double backward = c_small / ube;
    worst = std::max({worst, forward, backward});
    rows.push_back({{"f", spec}, {"ube_B_r", ube}, {"ckalpha_B_r+delta", c_big}, {"ckalpha_B_r", c_small},
                    {"ube_over_ckalpha", forward}, {"ckalpha_over_ube", backward}});
  }
  CheckResult r;
  r.passed = std::isfinite(worst) && worst <= 10.0;
  r.details["q"] = q;
  r.details["rows"] = rows;
  r.details["max_ratio"] = worst;
  char buf[160];
  std::snprintf(buf, sizeof buf, "UBE vs C^{1,1/2} on 10 smooth functions of R^2: max ratio %.3f (<= 10)", worst);
  r.summary = buf;
  return r;
}

CheckResult check_norm_comparability(const Options& options) {
  const ConeParam params(Rational(1, 2), 1);
  const double alpha = 0.3;
  const SamplingPlan plan = SamplingPlan::cone_default(params);
  auto rows = nlohmann::ordered_json::array();
  double worst = 0.0;
  bool ok = true;
  std::vector<std::string> family;
  for (int i = 0; i < 6; ++i) family.push_back("monic:" + std::to_string(i));
  for (int i = 0; i < 6; ++i) family.push_back("synthetic:" + std::to_string(i));
  for (const auto& spec : family) {
    const ComparisonTable table = compare_spaces(cone_field(spec, params), alpha, params, plan, 1e3);
    ok = ok && !table.any_flagged;
    worst = std::max(worst, table.max_ratio);
    nlohmann::ordered_json row{{"f", spec}, {"max_ratio", table.max_ratio}};
    for (const auto& c : table.rows) row[c.name] = c.ratio;
    rows.push_back(std::move(row));
  }
  const CheckResult cross = check_ube_cross_bound(options);
  CheckResult r;
  r.passed = ok && cross.passed;
  r.details["comparability"] = rows;
  r.details["max_ratio"] = worst;
  r.details["ube_cross_bound"] = cross.details;
  char buf[240];
  std::snprintf(buf, sizeof buf, "Thm 1.2 ratios on 12 functions: max %.3f (<= 1e3); %s", worst, cross.summary.c_str());
  r.summary = buf;
  return r;
}

CheckResult check_schauder(const Options&) {
  const auto start = std::chrono::steady_clock::now();
  struct Entry {
    Rational beta;
    double q;
  };
  const std::vector<Entry> matrix = {
      {Rational(1, 3), 0.5}, {Rational(1, 2), 0.4}, {Rational(3, 4), 0.4}, {Rational(1), 0.5}, {Rational(2), 0.7}};
  const double ceiling = 1e3;
  bool ok = true;
  double worst_drift = 0.0;
  double worst_constant = 0.0;
  auto tables = nlohmann::ordered_json::array();
  for (const auto& e : matrix) {
    SchauderConfig coarse;
    coarse.params = ConeParam(e.beta);
    coarse.q = e.q;
    coarse.levels = 10;
    coarse.points_per_octave = 128;
    SchauderConfig fine = coarse;
    fine.levels = 12;
    fine.points_per_octave = 256;
    auto rows = nlohmann::ordered_json::array();
    double max_coarse = 0.0;
    double max_fine = 0.0;
    for (const auto& spec : schauder_family(e.q)) {
      const ConeFunction f = cone_field(spec, coarse.params);
      const SchauderReport a = run_schauder(f, coarse, spec);
      const SchauderReport b = run_schauder(f, fine, spec);
      const double drift = std::fabs(b.constant / a.constant - 1.0);
      const bool bounded = std::isfinite(a.constant) && std::isfinite(b.constant) && b.constant <= ceiling;
      ok = ok && bounded && drift <= 0.3 && !a.trivial;
      worst_drift = std::max(worst_drift, std::isfinite(drift) ? drift : std::numeric_limits<double>::infinity());
      max_coarse = std::max(max_coarse, a.constant);
      max_fine = std::max(max_fine, b.constant);
      rows.push_back({{"f", spec},
                      {"constant_coarse", a.constant},
                      {"constant_fine", b.constant},
                      {"drift", drift},
                      {"u_Uq2_B1", b.u_norm.total},
                      {"u_C0_B2", b.u_sup},
                      {"f_Uq_B2", b.f_norm.total},
                      {"max_residual", b.max_residual}});
    }
    const double table_drift = std::fabs(max_fine / max_coarse - 1.0);
    ok = ok && table_drift <= 0.3;
    worst_constant = std::max(worst_constant, max_fine);
    tables.push_back({{"beta", to_string(e.beta)},
                      {"q", e.q},
                      {"fitted_constant", max_fine},
                      {"fitted_constant_coarse", max_coarse},
                      {"family", rows}});
  }
  // f = 0 must come back as the flagged trivial case.
  SchauderConfig zero_cfg;
  zero_cfg.params = ConeParam(Rational(1, 2));
  zero_cfg.q = 0.4;
  zero_cfg.points_per_octave = 64;
  const SchauderReport zero = run_schauder(cone_field("zero", zero_cfg.params), zero_cfg, "zero");
  ok = ok && zero.trivial && zero.constant == 0.0;

  const double seconds = elapsed_since(start);
  CheckResult r;
  r.passed = ok && seconds < 600.0;
  r.details["tables"] = tables;
  r.details["zero_input_trivial"] = zero.trivial;
  r.details["max_constant"] = worst_constant;
  r.details["max_drift"] = worst_drift;
  r.details["seconds"] = seconds;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "5 (beta,q) x 10 functions: max constant %.3f (<= 1e3), max refinement drift %.3f (<= 0.3), %.1f s (limit 600 s)",
                worst_constant, worst_drift, seconds);
  r.summary = buf;
  return r;
}

CheckResult check_resonance_rejection(const Options&) {
  const ConeParam half(Rational(1, 2));
  std::vector<std::pair<std::string, bool>> cases;
  cases.emplace_back("dyadic q = 1 in D", throws<ResonantOrderError>([&] {
    DyadicConfig cfg;
    cfg.params = half;
    cfg.q = 1.0;
    cfg.validate();
  }));
  cases.emplace_back("dyadic q + 2 = 2 in D", throws<ResonantOrderError>([&] {
    DyadicConfig cfg;
    cfg.params = ConeParam(Rational(3, 4));
    cfg.q = 2.0 / 3.0;  // q + 2 = 8/3 = 2 * (4/3)
    cfg.validate();
  }));
  cases.emplace_back("U^q norm at q = 2", throws<ResonantOrderError>([&] {
    uq_norm(cone_field("rho:2", half), 2.0, half, SamplingPlan::cone_default(half));
  }));
  cases.emplace_back("harmonic expansion at q = 2 = 1/beta", throws<ResonantOrderError>([&] {
    extract_coeffs(solve_dirichlet(boundary_field("cos:1"), half, RadialGrid(1.0 / 16.0, 1.0, 32), 4), 2.0, 0.25);
  }));
  cases.emplace_back("Schauder at q = 1", throws<ResonantOrderError>([&] {
    SchauderConfig cfg;
    cfg.params = half;
    cfg.q = 1.0;
    run_schauder(cone_field("zero", half), cfg);
  }));
  cases.emplace_back("UBE at integer q", throws<IntegerOrderError>([&] {
    ube_seminorm_rn(rn_field("smooth:0"), 2.0, SamplingPlan::ube_default(2, 0.25));
  }));
  CheckResult r;
  r.passed = true;
  for (const auto& [name, rejected] : cases) {
    r.details[name] = rejected;
    r.passed = r.passed && rejected;
  }
  r.summary = r.passed ? "all resonant / integer orders rejected" : "a resonant order was accepted";
  return r;
}

CheckResult check_ube_divergence(const Options&) {
  const double q = 1.3;
  const RnFunction f = rn_field("xsin");
  std::vector<double> values;
  auto rows = nlohmann::ordered_json::array();
  for (int e = 3; e <= 10; ++e) {
    const double d = std::ldexp(1.0, -e);
    SamplingPlan plan;
    plan.delta = d;
    plan.fd_step = d / 64.0;
    for (double c : {0.3, 0.5, 0.7, 1.0}) plan.centers.push_back({c * d});
    for (double h = 0.99 * d; h > d * d / 16.0; h *= std::pow(2.0, -0.25)) {
      plan.increments.push_back({h});
      plan.increments.push_back({-h});
    }
    const double v = ube_seminorm_rn(f, q, plan).total;
    values.push_back(v);
    rows.push_back({{"delta", d}, {"estimate", v}});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < values.size(); ++i) monotone = monotone && values[i] >= values[i - 1];
  const double growth = values.back() / values.front();
  CheckResult r;
  r.passed = monotone && growth >= 10.0;
  r.details["q"] = q;
  r.details["rows"] = rows;
  r.details["growth"] = growth;
  char buf[160];
  std::snprintf(buf, sizeof buf, "x^2 sin(1/x), q=1.3: estimate grows x%.1f over delta = 2^-3..2^-10 (monotone: %s)", growth,
                monotone ? "yes" : "no");
  r.summary = buf;
  return r;
}

CheckResult check_donaldson_divergence(const Options&) {
  const ConeParam half(Rational(1, 2));
  const double alpha = 0.3;
  const ConeFunction u = cone_field("rho:" + nlohmann::json(alpha / 2.0).dump(), half);
  std::vector<double> values;
  auto rows = nlohmann::ordered_json::array();
  for (double rho_min : {1.0 / 16, 1.0 / 64, 1.0 / 256, 1.0 / 1024}) {
    SamplingPlan plan = SamplingPlan::cone_default(half);
    plan.rho_min = rho_min;
    const NormReport rep = donaldson_norm(u, alpha, half, plan);
    values.push_back(rep.clause("D2:d_rho u"));
    rows.push_back({{"rho_min", rho_min}, {"D2:d_rho u", values.back()}, {"total", rep.total}});
  }
  bool growing = true;
  for (std::size_t i = 1; i < values.size(); ++i) growing = growing && values[i] >= 1.5 * values[i - 1];
  const double growth = values.back() / values.front();
  CheckResult r;
  r.passed = growing && growth >= 10.0;
  r.details["u"] = "rho^(alpha/2)";
  r.details["rows"] = rows;
  r.details["growth"] = growth;
  char buf[160];
  std::snprintf(buf, sizeof buf, "rho^(alpha/2) below C^{2,alpha}_beta: D2 estimate grows x%.1f as the grid reaches the apex",
                growth);
  r.summary = buf;
  return r;
}

CheckResult check_negative_controls(const Options& options) {
  const CheckResult resonance = check_resonance_rejection(options);
  const CheckResult ube = check_ube_divergence(options);
  const CheckResult donaldson = check_donaldson_divergence(options);
  CheckResult r;
  r.passed = resonance.passed && ube.passed && donaldson.passed;
  r.details["resonance"] = resonance.details;
  r.details["ube_divergence"] = ube.details;
  r.details["donaldson_divergence"] = donaldson.details;
  r.summary = resonance.summary + "; " + ube.summary + "; " + donaldson.summary;
  return r;
}

}  // namespace conic::verify
