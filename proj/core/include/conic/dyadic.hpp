#pragma once

#include <string>
#include <vector>

#include "conic/modegrid.hpp"
#include "conic/tpoly.hpp"

namespace conic {

struct DyadicConfig {
  ConeParam params{Rational(1)};
  double q = 0.5;
  int levels = 10;
  int max_mode = 16;
  int points_per_octave = 256;
  /// Outer radius R: level l covers the annulus R (2^{-l-1}, 2^{-l}].
  double radius = 1.0;
  /// Relative step of the finite-difference residual probes.
  double probe_step = 1e-3;

  /// [R 2^{-L-2}, 2R].
  RadialGrid grid() const;
  /// ParameterError for bad sizes, ResonantOrderError when q or q+2 is in D.
  void validate() const;
};

/// y -> f(y) when R 2^{-l-1} < d(y) <= R 2^{-l}, else 0.
ConeFunction restrict_to_annulus(ConeFunction f, int level, double radius = 1.0);

/// Mode-wise solution of Delta w = f chi_{[a, b]} on the field's grid, with the
/// integration over the closed annulus a <= rho <= b using the values of f.
/// Mode 0 is the solution bounded at rho = 0 (the 2-D Newtonian potential).
ModeField solve_on_annulus(const ModeField& f, double a, double b);

/// w_l from the modes of the (unrestricted) smooth field f.
ModeField solve_level(const ModeField& f, int level, const DyadicConfig& cfg);
/// w_l from a function supported in the annulus of level l; SupportError if
/// it is visibly nonzero outside.
ModeField solve_level(const ConeFunction& f_level, int level, const DyadicConfig& cfg);

struct DyadicPiece {
  int level = 0;
  ModeField w;
  FPolynomial P;
  ModeField u;
};

struct ProbeResidual {
  double rho = 0.0;
  double theta = 0.0;
  double residual = 0.0;
};

struct DyadicSolution {
  DyadicConfig cfg;
  ModeField f;
  std::vector<DyadicPiece> pieces;
  ModeField u;
  /// sup |f| / d^q and sup |u| / d^{q+2} over nodes in [R 2^{-L+1}, R].
  double f_seminorm = 0.0;
  double u_seminorm = 0.0;
  double seminorm_ratio = 0.0;
  std::vector<ProbeResidual> probes;
  double max_residual = 0.0;
  /// Bound for the omitted levels l >= L on B_R.
  double truncation_error = 0.0;
};

/// Mode analysis of f on cfg's grid, then the dyadic sum.
DyadicSolution construct(const ConeFunction& f, const DyadicConfig& cfg);
DyadicSolution construct(const ModeField& f, const DyadicConfig& cfg);

struct DegreeRatio {
  Rational degree;
  double ratio = 0.0;
};

struct LevelDiagnostics {
  int level = 0;
  /// sup_{B_{R 2^{-l-1}}} |u_l| / d^{(q+2)*}, divided by [f] 2^{((q+2)* - (q+2)) l} R^{...}.
  double inner = 0.0;
  /// sup over the annulus of |u_l| / d^{q+2}, divided by [f].
  double annulus = 0.0;
  /// sup_{d >= R 2^{-l}} |u_l| over the degree-weighted outer bound.
  double outer = 0.0;
  /// |coefficient of P_l of each degree| / ([f] 2^{-l (q+2-degree)}).
  std::vector<DegreeRatio> degree_ratios;
};

std::vector<LevelDiagnostics> level_diagnostics(const DyadicSolution& sol);
std::string diagnostics_csv(const std::vector<LevelDiagnostics>& diag);

/// max/min of each diagnostic column over levels in [lo, hi] whose entries
/// exceed floor (entries at round-off level carry no scaling information);
/// 1 when fewer than two levels contribute.
struct DiagnosticSpread {
  double inner = 1.0;
  double annulus = 1.0;
  double outer = 1.0;
  double worst() const;
};
DiagnosticSpread diagnostic_spread(const std::vector<LevelDiagnostics>& diag, int lo, int hi,
                                   double floor = 1e-9);

}  // namespace conic
