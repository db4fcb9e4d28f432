#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conic/geometry.hpp"
#include "conic/multiindex.hpp"
#include "conic/tpoly.hpp"

namespace conic {

using RnPoint = std::vector<double>;
using RnFunction = std::function<double(std::span<const double>)>;

/// Where and how densely the sup-type quantities are sampled. The R^n fields
/// drive the UBE estimator; the rest drive the cone estimators.
struct SamplingPlan {
  /// Expansion scale: increments and H2 balls have radius < delta; H1 lives
  /// on rho >= delta.
  double delta = 0.25;
  /// Finite-difference step (relative to the local scale rho on the cone).
  double fd_step = 1e-3;
  /// The estimators work on the ball of this radius about the origin.
  double radius = 1.0;

  std::vector<RnPoint> centers;
  std::vector<RnPoint> increments;  // used for the fit and the sup
  std::vector<RnPoint> probes;      // used for the sup only

  int octaves = 6;                  // H2 ball radii delta 2^{-i / per_octave}
  int per_octave = 2;
  int angles = 8;
  std::vector<double> xi_values{0.0};
  int interior_radii = 5;           // H1 radii in [delta, radius)
  int h3_levels = 4;                // H3 centers at rho = delta 2^{-i}, i = 1..h3_levels
  int ball_points = 5;              // per axis in the reference ball
  double ball_fraction = 0.5;       // H3 on B~_{ball_fraction}
  double rho_min = 1.0 / 64.0;      // inner radius of the Donaldson polar grid

  /// increments inside B_delta, fd_step <= delta / 16, sizes positive.
  void validate() const;

  /// Centers on a grid in B_{center_radius} of R^n, increments on 2n
  /// rays + diagonals with |h| = delta 2^{-i/2}, i < 2 octaves.
  static SamplingPlan ube_default(int n, double delta, double center_radius = 0.5, int octaves = 6);
  static SamplingPlan cone_default(const ConeParam& params, double delta = 0.25);
};

std::string to_json(const SamplingPlan& plan);
SamplingPlan plan_from_json(const std::string& text);

struct NormClause {
  std::string name;
  double value = 0.0;
};

struct CenterDetail {
  std::vector<double> center;
  std::string polynomial;  // JSON or coefficient list
  double coefficient_max = 0.0;
  double remainder_ratio = 0.0;
};

/// Clause estimates combined by max (UBE, U^q) or sum (Donaldson).
struct NormReport {
  std::string kind;
  std::string combine = "max";
  std::vector<NormClause> clauses;
  double total = 0.0;
  std::vector<CenterDetail> centers;

  double clause(std::string_view name) const;
  double lambda_h1() const { return clause("H1"); }
  double lambda_h2() const { return clause("H2"); }
  double lambda_h3() const { return clause("H3"); }
  void add(std::string name, double value);
  void finish();
};

std::string to_json(const NormReport& report);

/// max over pairs of |v_i - v_j| / d(i, j)^alpha; pairs at distance 0 are skipped.
double holder_seminorm(std::span<const double> values, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                       double alpha, const std::function<double(std::size_t, std::size_t)>& metric);
/// All pairs of the given cone points under cone_distance.
double holder_seminorm(const ConeFunction& u, std::span<const ConePoint> points, double alpha,
                       const ConeParam& params);

/// Central-difference partial derivative d^sigma F(x) with step h.
double central_derivative(const RnFunction& F, std::span<const double> x, const MultiIndex& sigma, double h);

/// sum_{|s| <= k} sup |d^s f| + sum_{|s| = k} [d^s f]_alpha over the points
/// (Euclidean distance), derivatives by central differences with step h.
double ckalpha_norm_rn(const RnFunction& f, std::span<const RnPoint> points, int k, double alpha, double h);

NormReport ube_seminorm_rn(const RnFunction& f, double q, const SamplingPlan& plan);

/// Least-squares T-polynomial fit of degree < q at the singular point
/// (0, 0, center_xi). The constant term is u at the center; the rest minimise
/// the d^{-q}-weighted residual over the plan's H2 samples.
struct TFit {
  FPolynomial P;
  double coefficient_max = 0.0;
  double remainder_ratio = 0.0;
};
TFit fit_t_polynomial(const ConeFunction& u, const std::vector<double>& center_xi, double q,
                      const ConeParam& params, const SamplingPlan& plan);

NormReport uq_norm(const ConeFunction& u, double q, const ConeParam& params, const SamplingPlan& plan);

/// Requires 0 < beta < 1 and 0 < alpha < min(1, 1/beta - 1).
NormReport donaldson_norm(const ConeFunction& u, double alpha, const ConeParam& params, const SamplingPlan& plan);

/// sup |u| + [u]_alpha over the plan's polar grid of B_radius.
double holder_norm(const ConeFunction& u, double alpha, const ConeParam& params, const SamplingPlan& plan);

struct ComparisonRow {
  std::string name;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool flagged = false;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  double max_ratio = 0.0;
  bool any_flagged = false;
};

/// The four ratios behind the equivalences C^alpha ~ U^alpha and
/// C^{2,alpha}_beta ~ U^{2+alpha}, each norm on B_1 against the other on B_2.
ComparisonTable compare_spaces(const ConeFunction& u, double alpha, const ConeParam& params,
                               const SamplingPlan& plan, double ceiling = 1e3);

std::string to_json(const ComparisonTable& table);

}  // namespace conic
