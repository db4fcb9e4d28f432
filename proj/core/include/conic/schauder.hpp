#pragma once

#include <string>
#include <vector>

#include "conic/dyadic.hpp"
#include "conic/norms.hpp"
#include "conic/tpoly.hpp"

namespace conic {

struct SchauderConfig {
  ConeParam params{Rational(1)};
  double q = 0.5;
  int levels = 10;
  int max_mode = 16;
  int points_per_octave = 256;
  /// Expansion scale of the norm plans.
  double delta = 0.25;
};

struct SchauderReport {
  std::string f_spec;
  SchauderConfig cfg;
  /// Fitted T-part of f at the apex and its exact Poisson lift.
  FPolynomial f_part{ConeParam(Rational(1))};
  FPolynomial lift{ConeParam(Rational(1))};
  double max_residual = 0.0;
  double seminorm_ratio = 0.0;
  NormReport u_norm;  // U^{q+2}(B_1)
  NormReport f_norm;  // U^q(B_2)
  double u_sup = 0.0; // C^0(B_2)
  double constant = 0.0;
  bool trivial = false;
  double seconds = 0.0;
};

/// Solves Delta u = f on B_2: the fitted T-part of f is lifted with
/// solve_poisson, the O(d^q) rest goes through the dyadic construction with
/// R = 2. Reports |u|_{U^{q+2}(B_1)} / (|u|_{C^0(B_2)} + |f|_{U^q(B_2)}).
SchauderReport run_schauder(const ConeFunction& f, const SchauderConfig& cfg, std::string f_spec = "");

/// Specs of the ten-member U^q family (builtin "family:i:q").
std::vector<std::string> schauder_family(double q);

std::string to_json(const SchauderReport& report);

}  // namespace conic
