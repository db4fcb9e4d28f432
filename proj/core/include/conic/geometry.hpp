#pragma once

#include <functional>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "conic/rational.hpp"

namespace conic {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Cone angle 2*pi*beta times R^xi_dim, with the product metric
/// d rho^2 + beta^2 rho^2 d theta^2 + d xi^2.
class ConeParam {
 public:
  ConeParam(Rational beta, int xi_dim = 0);

  const Rational& beta() const noexcept { return beta_; }
  double beta_d() const noexcept { return beta_d_; }
  int xi_dim() const noexcept { return xi_dim_; }

  /// Radius of the reference ball around (1, 0, 0): (1/4) min(1, beta).
  double c_beta() const noexcept;

  /// Throws ParameterError unless xi_dim == 0 (grid numerics are 2-D only).
  void require_planar() const;

  friend bool operator==(const ConeParam&, const ConeParam&) = default;

 private:
  Rational beta_;
  double beta_d_;
  int xi_dim_;
};

/// Point (rho, theta, xi) on the cone. theta is kept in [0, 2 pi) and is 0 at
/// the apex.
struct ConePoint {
  double rho = 0.0;
  double theta = 0.0;
  std::vector<double> xi;

  ConePoint() = default;
  ConePoint(double rho_, double theta_, std::vector<double> xi_ = {});

  friend bool operator==(const ConePoint&, const ConePoint&) = default;
};

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double theta) noexcept;

/// Exact point: rho and xi rational, angle stored in turns in [0, 1)
/// (theta = 2 pi * turns).
struct ExactConePoint {
  Rational rho;
  Rational turns;
  std::vector<Rational> xi;

  ConePoint to_point() const;
  friend bool operator==(const ExactConePoint&, const ExactConePoint&) = default;
};

using ConeFunction = std::function<double(const ConePoint&)>;

/// Riemannian distance of the product cone metric (unfolding geodesics).
double cone_distance(const ConePoint& a, const ConePoint& b, const ConeParam& params);

/// Distance to the origin x0 = (0, 0, 0).
double apex_distance(const ConePoint& p) noexcept;

/// The set D = { j + k / beta : j, k >= 0 integers }.
class DegreeSet {
 public:
  explicit DegreeSet(Rational beta);

  const Rational& beta() const noexcept { return beta_; }

  bool contains(const Rational& t) const;
  /// min { d in D : d > t }, for t >= 0.
  Rational next_above(const Rational& t) const;
  /// Every element of D that is <= bound, sorted, without duplicates.
  std::vector<Rational> elements_up_to(const Rational& bound) const;

 private:
  Rational beta_;
  Rational inv_beta_;
};

bool degree_set_contains(const Rational& t, const DegreeSet& ds);
Rational next_degree_above(const Rational& t, const DegreeSet& ds);

/// Floating-point membership test: true when t is within tol of some element.
bool degree_set_near(double t, const DegreeSet& ds, double tol = 1e-12);

/// Psi_x(z) = (rho_z / rho_x, theta_z - theta_x, (xi_z - xi_x) / rho_x).
ConePoint scale_map(const ConePoint& x, const ConePoint& z, const ConeParam& params);
ConePoint inverse_scale_map(const ConePoint& x, const ConePoint& y, const ConeParam& params);
ExactConePoint scale_map(const ExactConePoint& x, const ExactConePoint& z, const ConeParam& params);
ExactConePoint inverse_scale_map(const ExactConePoint& x, const ExactConePoint& y,
                                 const ConeParam& params);

/// The reference point (1, 0, 0) that Psi_x sends x to.
ConePoint unit_reference_point(const ConeParam& params);

/// S_x(f)(y) = f(Psi_x^{-1}(y)).
ConeFunction pushforward(const ConePoint& x, ConeFunction f, const ConeParam& params);

/// Moves p by a Euclidean offset in the flat chart centred at p. The chart
/// unrolls the cone locally: (X, Y) = (rho cos(beta dtheta), rho sin(beta dtheta)).
/// Valid while |(dx, dy)| < rho(p).
ConePoint flat_offset(const ConePoint& p, double dx, double dy, std::span<const double> dxi,
                      const ConeParam& params);

/// Parses "rho,theta,xi1,...".
ConePoint parse_point(std::string_view text, int xi_dim);

}  // namespace conic
