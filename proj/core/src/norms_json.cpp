#include <json.hpp>

#include "conic/errors.hpp"
#include "conic/norms.hpp"

namespace conic {

using nlohmann::json;

std::string to_json(const SamplingPlan& plan) {
  json j;
  j["delta"] = plan.delta;
  j["fd_step"] = plan.fd_step;
  j["radius"] = plan.radius;
  j["centers"] = plan.centers;
  j["increments"] = plan.increments;
  j["probes"] = plan.probes;
  j["octaves"] = plan.octaves;
  j["per_octave"] = plan.per_octave;
  j["angles"] = plan.angles;
  j["xi_values"] = plan.xi_values;
  j["interior_radii"] = plan.interior_radii;
  j["h3_levels"] = plan.h3_levels;
  j["ball_points"] = plan.ball_points;
  j["ball_fraction"] = plan.ball_fraction;
  j["rho_min"] = plan.rho_min;
  return j.dump(2);
}

SamplingPlan plan_from_json(const std::string& text) {
  SamplingPlan plan;
  try {
    const json j = json::parse(text);
    plan.delta = j.value("delta", plan.delta);
    plan.fd_step = j.value("fd_step", plan.fd_step);
    plan.radius = j.value("radius", plan.radius);
    plan.centers = j.value("centers", plan.centers);
    plan.increments = j.value("increments", plan.increments);
    plan.probes = j.value("probes", plan.probes);
    plan.octaves = j.value("octaves", plan.octaves);
    plan.per_octave = j.value("per_octave", plan.per_octave);
    plan.angles = j.value("angles", plan.angles);
    plan.xi_values = j.value("xi_values", plan.xi_values);
    plan.interior_radii = j.value("interior_radii", plan.interior_radii);
    plan.h3_levels = j.value("h3_levels", plan.h3_levels);
    plan.ball_points = j.value("ball_points", plan.ball_points);
    plan.ball_fraction = j.value("ball_fraction", plan.ball_fraction);
    plan.rho_min = j.value("rho_min", plan.rho_min);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad sampling plan JSON: ") + e.what());
  }
  plan.validate();
  return plan;
}

std::string to_json(const NormReport& report) {
  json j;
  j["kind"] = report.kind;
  j["combine"] = report.combine;
  j["total"] = report.total;
  json clauses = json::array();
  for (const auto& c : report.clauses) clauses.push_back({{"name", c.name}, {"value", c.value}});
  j["clauses"] = std::move(clauses);
  json centers = json::array();
  for (const auto& c : report.centers) {
    json p = json::parse(c.polynomial, nullptr, false);
    if (p.is_discarded()) p = c.polynomial;
    centers.push_back({{"center", c.center},
                       {"polynomial", std::move(p)},
                       {"coefficient_max", c.coefficient_max},
                       {"remainder_ratio", c.remainder_ratio}});
  }
  j["centers"] = std::move(centers);
  return j.dump(2);
}

std::string to_json(const ComparisonTable& table) {
  json j;
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"name", r.name},
                    {"numerator", r.numerator},
                    {"denominator", r.denominator},
                    {"ratio", r.ratio},
                    {"flagged", r.flagged}});
  }
  j["rows"] = std::move(rows);
  j["max_ratio"] = table.max_ratio;
  j["any_flagged"] = table.any_flagged;
  return j.dump(2);
}

}  // namespace conic
