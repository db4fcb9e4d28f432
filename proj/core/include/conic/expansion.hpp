#pragma once

#include <functional>
#include <vector>

#include "conic/modegrid.hpp"
#include "conic/tpoly.hpp"

namespace conic {

struct HarmonicCoeff {
  int k = 0;
  double a = 0.0;  // cos
  double b = 0.0;  // sin
  double degree = 0.0;
};

/// u ~ sum_k rho^{k/beta} (a_k cos k theta + b_k sin k theta), k/beta < q.
struct HarmonicExpansion {
  Rational beta;
  double q = 0.0;
  double rho_star = 0.0;
  std::vector<HarmonicCoeff> coeffs;
  /// sup over grid nodes with rho <= rho_star of |u - sum| / rho^q.
  double remainder_seminorm = 0.0;
};

using BoundaryFunction = std::function<double(double theta)>;

/// Harmonic extension of boundary data on {rho = 1}, mode by mode.
ModeField solve_dirichlet(const BoundaryFunction& g, const ConeParam& params, const RadialGrid& grid,
                          int max_mode);

/// True when q = k / beta for some integer k >= 0 (to tolerance): the
/// orders at which a planar harmonic expansion is ambiguous.
bool is_harmonic_resonant(double q, const Rational& beta, double tol = 1e-12);

HarmonicExpansion extract_coeffs(const ModeField& u, double q, double rho_star);

/// P_l: harmonic X_beta-polynomial of w's modes with k / beta < q_plus_2,
/// coefficients read at radius * 2^{-l-2}.
FPolynomial expansion_of_dyadic_piece(const ModeField& w, int level, double q_plus_2, double radius = 1.0);

}  // namespace conic
