#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "conic/geometry.hpp"
#include "conic/norms.hpp"

namespace conic {

/// Random trigonometric polynomial sum_{m <= max_mode} a_m cos(m t) + b_m sin(m t)
/// with coefficients uniform in [-1, 1].
struct AngularProfile {
  std::vector<double> a;
  std::vector<double> b;

  static AngularProfile random(std::uint64_t seed, int max_mode = 4);
  double operator()(double theta) const;
};

/// Named cone functions:
///   zero, const:c, chi:r                     chi_{B_r} (closed ball)
///   power:s:m, powersin:s:m                   rho^s cos(m theta) chi_{B_1}
///   band:s:seed                               rho^s profile(theta) chi_{B_1}, profile m <= 4
///   radial-band:s:seed:k                      band times a radial factor, k in 0..4
///   harmonic:k, harmonicsin:k                 rho^{k/beta} cos(k theta)
///   rho:s                                     rho^s
///   monic:i  (i = 0..5)                       1, rho^{1/b} cos, rho^{1/b} sin, rho^2, xi, xi^2
///   synthetic:i (i = 0..5)                    smooth mixed rho / xi test functions
///   family:i:q (i = 0..9)                   c_i + [q > 1/beta] a_i rho^{1/beta} cos + rho^q profile_i,
///                                             the U^q test family of the Schauder runs
///   tpoly:PATH                                T-polynomial JSON file
ConeFunction cone_field(std::string_view spec, const ConeParam& params);

/// Boundary data on {rho = 1}: const:c, cos:k, sin:k, band:seed:M.
std::function<double(double)> boundary_field(std::string_view spec);

/// Functions on R^n: abs-power:p (|x|^p), xsin (x1^2 sin(1/x1)), smooth:i (i = 0..9, on R^2).
RnFunction rn_field(std::string_view spec);

std::vector<std::string> split_spec(std::string_view spec);

}  // namespace conic
