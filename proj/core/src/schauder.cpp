#include "conic/schauder.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "conic/errors.hpp"

namespace conic {

namespace {

SamplingPlan plan_for(const SchauderConfig& cfg, double radius) {
  SamplingPlan plan = SamplingPlan::cone_default(cfg.params, cfg.delta);
  plan.radius = radius;
  return plan;
}

}  // namespace

SchauderReport run_schauder(const ConeFunction& f, const SchauderConfig& cfg, std::string f_spec) {
  const auto start = std::chrono::steady_clock::now();
  cfg.params.require_planar();
  DyadicConfig dcfg;
  dcfg.params = cfg.params;
  dcfg.q = cfg.q;
  dcfg.levels = cfg.levels;
  dcfg.max_mode = cfg.max_mode;
  dcfg.points_per_octave = cfg.points_per_octave;
  dcfg.radius = 2.0;
  dcfg.validate();

  SchauderReport report;
  report.f_spec = std::move(f_spec);
  report.cfg = cfg;

  const SamplingPlan small = plan_for(cfg, 1.0);
  const SamplingPlan big = plan_for(cfg, 2.0);
  // The T-part is fitted over many octaves: neighbouring degrees such as
  // 1/2 and 0.7 only separate once the radii span a wide range.
  SamplingPlan deep = big;
  deep.octaves = 40;
  report.f_part = fit_t_polynomial(f, {}, cfg.q, cfg.params, deep).P;
  report.lift = solve_poisson(report.f_part);

  const ConeFunction f_part = as_function(report.f_part);
  const ConeFunction rest = [&f, f_part](const ConePoint& p) { return f(p) - f_part(p); };
  const DyadicSolution sol = construct(rest, dcfg);
  report.max_residual = sol.max_residual;
  report.seminorm_ratio = sol.seminorm_ratio;

  const ConeFunction lift = as_function(report.lift);
  const ModeField& dyadic_u = sol.u;
  const ConeFunction u = [lift, &dyadic_u](const ConePoint& p) {
    if (p.rho == 0.0) return lift(p);
    return lift(p) + synthesize(dyadic_u, p);
  };

  report.u_norm = uq_norm(u, cfg.q + 2.0, cfg.params, small);
  report.f_norm = uq_norm(f, cfg.q, cfg.params, big);
  const RadialGrid& grid = dyadic_u.grid();
  const int angles = angular_samples(cfg.max_mode);
  report.u_sup = std::fabs(u(ConePoint(0.0, 0.0)));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > 2.0 * (1.0 + 1e-12)) break;
    for (int a = 0; a < angles; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / angles;
      report.u_sup = std::max(report.u_sup, std::fabs(u(ConePoint(grid[i], theta))));
    }
  }
  const double rhs = report.u_sup + report.f_norm.total;
  report.trivial = !(rhs > 0.0);
  report.constant = report.trivial ? 0.0 : report.u_norm.total / rhs;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::string> schauder_family(double q) {
  std::vector<std::string> specs;
  std::ostringstream qs;
  qs.precision(17);
  qs << q;
  for (int i = 0; i < 10; ++i) specs.push_back("family:" + std::to_string(i) + ":" + qs.str());
  return specs;
}

std::string to_json(const SchauderReport& report) {
  nlohmann::ordered_json j;
  j["f"] = report.f_spec;
  j["beta"] = to_string(report.cfg.params.beta());
  j["q"] = report.cfg.q;
  j["levels"] = report.cfg.levels;
  j["max_mode"] = report.cfg.max_mode;
  j["points_per_octave"] = report.cfg.points_per_octave;
  j["delta"] = report.cfg.delta;
  j["f_t_part"] = nlohmann::json::parse(to_json(report.f_part));
  j["lift"] = nlohmann::json::parse(to_json(report.lift));
  j["max_residual"] = report.max_residual;
  j["seminorm_ratio"] = report.seminorm_ratio;
  j["u_norm_Uq2_B1"] = nlohmann::json::parse(to_json(report.u_norm));
  j["f_norm_Uq_B2"] = nlohmann::json::parse(to_json(report.f_norm));
  j["u_sup_B2"] = report.u_sup;
  j["constant"] = report.constant;
  j["trivial"] = report.trivial;
  return j.dump(2);
}

}  // namespace conic
