#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "conic/geometry.hpp"
#include "conic/tpoly.hpp"

namespace conic {

/// Geometric radial grid. The ratio is (rho_max / rho_min)^(1 / (n - 1)) with
/// n - 1 = ceil(octaves * points_per_octave), so both ends are nodes.
class RadialGrid {
 public:
  RadialGrid(double rho_min, double rho_max, int points_per_octave);
  /// [2^lo, 2^hi].
  static RadialGrid octaves(int lo, int hi, int points_per_octave);

  double rho_min() const noexcept { return nodes_.front(); }
  double rho_max() const noexcept { return nodes_.back(); }
  int points_per_octave() const noexcept { return ppo_; }
  double ratio() const noexcept { return ratio_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  double operator[](std::size_t i) const { return nodes_[i]; }

  /// Largest i with nodes[i] <= rho (clamped to [0, n-2]); rho must be in range.
  std::size_t index_below(double rho) const;
  bool contains(double rho) const noexcept;

 private:
  int ppo_;
  double ratio_;
  std::vector<double> nodes_;
};

struct ModeKey {
  int m = 0;
  Trig trig = Trig::Cos;
  friend auto operator<=>(const ModeKey&, const ModeKey&) = default;
};

/// Angular Fourier modes of a planar cone function, sampled on a radial grid:
/// u(rho, theta) = sum_{m <= M} c_m(rho) cos(m theta) + s_m(rho) sin(m theta).
class ModeField {
 public:
  ModeField(ConeParam params, RadialGrid grid, int max_mode);

  const ConeParam& params() const noexcept { return params_; }
  const RadialGrid& grid() const noexcept { return grid_; }
  int max_mode() const noexcept { return max_mode_; }
  const std::map<ModeKey, std::vector<double>>& modes() const noexcept { return modes_; }

  std::vector<double>& mode(int m, Trig trig);
  const std::vector<double>& mode(int m, Trig trig) const;

  /// Interpolated radial coefficient of one mode.
  double mode_value(int m, Trig trig, double rho) const;

  ModeField& operator+=(const ModeField& other);
  ModeField& operator-=(const ModeField& other);
  ModeField scaled(double c) const;
  /// max over modes and nodes of |coefficient|.
  double max_abs() const;

 private:
  void require_compatible(const ModeField& other) const;

  ConeParam params_;
  RadialGrid grid_;
  int max_mode_;
  std::map<ModeKey, std::vector<double>> modes_;
};

/// Number of equispaced angles used by analyze.
int angular_samples(int max_mode) noexcept;

ModeField analyze(const ConeFunction& f, const ConeParam& params, const RadialGrid& grid, int max_mode);
double synthesize(const ModeField& mf, const ConePoint& p);
ConeFunction as_function(const ModeField& mf);

/// Modes of a planar polynomial sampled on the grid; terms with m > max_mode
/// raise GridError.
ModeField to_mode_field(const FPolynomial& p, const RadialGrid& grid, int max_mode);

/// Interpolates samples given on grid nodes at rho (6-point Lagrange in rho).
double interpolate(const RadialGrid& grid, const std::vector<double>& values, double rho);

/// Finite-difference cone Laplacian of u at sample minus f(sample). Radial
/// part: 3-point central differences; angular part: 5-point fourth-order
/// differences at arc-length step; xi part: 3-point central differences.
double laplacian_residual(const ConeFunction& u, const ConeFunction& f, const ConePoint& sample, double step,
                          const ConeParam& params);
/// The finite-difference Laplacian alone.
double fd_laplacian(const ConeFunction& u, const ConePoint& sample, double step, const ConeParam& params);

/// max over grid nodes with lo <= rho <= hi and angular_samples(M) angles of
/// |u(rho, theta)| / weight(rho), ignoring values with |u| <= noise. Returns 0
/// when no node is in range.
double weighted_sup(const ModeField& mf, double lo, double hi, const std::function<double(double)>& weight,
                    double noise = 0.0);
/// weighted_sup with weight rho^power.
double power_weighted_sup(const ModeField& mf, double lo, double hi, double power, double noise = 0.0);

/// CSV with columns rho,m,trig,value.
std::string to_csv(const ModeField& mf);
ModeField mode_field_from_csv(const std::string& text, const ConeParam& params);

}  // namespace conic
