#include "conic/modegrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "conic/errors.hpp"

namespace conic {

RadialGrid::RadialGrid(double rho_min, double rho_max, int points_per_octave) : ppo_(points_per_octave) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min) || !std::isfinite(rho_max)) {
    throw GridError("radial grid needs 0 < rho_min < rho_max");
  }
  if (points_per_octave < 1) throw GridError("points_per_octave must be positive");
  const double octaves = std::log2(rho_max / rho_min);
  const auto intervals = static_cast<std::size_t>(std::ceil(octaves * points_per_octave - 1e-9));
  ratio_ = std::pow(rho_max / rho_min, 1.0 / static_cast<double>(intervals));
  const double log_min = std::log(rho_min);
  const double log_step = std::log(rho_max / rho_min) / static_cast<double>(intervals);
  nodes_.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) nodes_[i] = std::exp(log_min + log_step * static_cast<double>(i));
  nodes_.front() = rho_min;
  nodes_.back() = rho_max;
}

RadialGrid RadialGrid::octaves(int lo, int hi, int points_per_octave) {
  return RadialGrid(std::ldexp(1.0, lo), std::ldexp(1.0, hi), points_per_octave);
}

bool RadialGrid::contains(double rho) const noexcept {
  const double tol = 1e-12 * rho_max();
  return rho >= rho_min() * (1.0 - 1e-12) && rho <= rho_max() + tol;
}

std::size_t RadialGrid::index_below(double rho) const {
  if (!contains(rho)) throw ExtrapolationError("radius outside the radial grid");
  const double x = std::log(rho / rho_min()) / std::log(ratio_);
  auto i = static_cast<long>(std::floor(x));
  i = std::clamp<long>(i, 0, static_cast<long>(nodes_.size()) - 2);
  // correct for rounding of the log estimate
  while (i > 0 && nodes_[static_cast<std::size_t>(i)] > rho) --i;
  while (i + 2 < static_cast<long>(nodes_.size()) && nodes_[static_cast<std::size_t>(i) + 1] <= rho) ++i;
  return static_cast<std::size_t>(i);
}

ModeField::ModeField(ConeParam params, RadialGrid grid, int max_mode)
    : params_(std::move(params)), grid_(std::move(grid)), max_mode_(max_mode) {
  params_.require_planar();
  if (max_mode < 0) throw ParameterError("max mode must be nonnegative");
  for (int m = 0; m <= max_mode; ++m) {
    modes_.emplace(ModeKey{m, Trig::Cos}, std::vector<double>(grid_.size(), 0.0));
    if (m > 0) modes_.emplace(ModeKey{m, Trig::Sin}, std::vector<double>(grid_.size(), 0.0));
  }
}

std::vector<double>& ModeField::mode(int m, Trig trig) {
  auto it = modes_.find(ModeKey{m, trig});
  if (it == modes_.end()) throw ParameterError("mode not present in field");
  return it->second;
}

const std::vector<double>& ModeField::mode(int m, Trig trig) const {
  auto it = modes_.find(ModeKey{m, trig});
  if (it == modes_.end()) throw ParameterError("mode not present in field");
  return it->second;
}

double ModeField::mode_value(int m, Trig trig, double rho) const {
  return interpolate(grid_, mode(m, trig), rho);
}

void ModeField::require_compatible(const ModeField& other) const {
  if (!(params_ == other.params_) || max_mode_ != other.max_mode_ || grid_.nodes() != other.grid_.nodes()) {
    throw GridError("mode fields live on different grids");
  }
}

ModeField& ModeField::operator+=(const ModeField& other) {
  require_compatible(other);
  for (auto& [k, v] : modes_) {
    const auto& w = other.modes_.at(k);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  }
  return *this;
}

ModeField& ModeField::operator-=(const ModeField& other) {
  require_compatible(other);
  for (auto& [k, v] : modes_) {
    const auto& w = other.modes_.at(k);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
  }
  return *this;
}

ModeField ModeField::scaled(double c) const {
  ModeField out(*this);
  for (auto& [k, v] : out.modes_) {
    for (double& x : v) x *= c;
  }
  return out;
}

double ModeField::max_abs() const {
  double best = 0.0;
  for (const auto& [k, v] : modes_) {
    for (double x : v) best = std::max(best, std::fabs(x));
  }
  return best;
}

int angular_samples(int max_mode) noexcept { return std::max(64, 8 * max_mode); }

ModeField analyze(const ConeFunction& f, const ConeParam& params, const RadialGrid& grid, int max_mode) {
  if (max_mode < 0) throw ParameterError("max mode must be nonnegative");
  ModeField out(params, grid, max_mode);
  const int n = angular_samples(max_mode);
  std::vector<double> cos_table(static_cast<std::size_t>(n));
  std::vector<double> sin_table(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    cos_table[static_cast<std::size_t>(j)] = std::cos(kTwoPi * j / n);
    sin_table[static_cast<std::size_t>(j)] = std::sin(kTwoPi * j / n);
  }
  std::vector<double> samples(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int j = 0; j < n; ++j) samples[static_cast<std::size_t>(j)] = f(ConePoint(grid[i], kTwoPi * j / n));
    for (int m = 0; m <= max_mode; ++m) {
      double c = 0.0;
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        const auto idx = static_cast<std::size_t>((static_cast<long>(m) * j) % n);
        c += samples[static_cast<std::size_t>(j)] * cos_table[idx];
        s += samples[static_cast<std::size_t>(j)] * sin_table[idx];
      }
      const double norm = (m == 0 ? 1.0 : 2.0) / n;
      out.mode(m, Trig::Cos)[i] = c * norm;
      if (m > 0) out.mode(m, Trig::Sin)[i] = s * norm;
    }
  }
  return out;
}

ModeField to_mode_field(const FPolynomial& p, const RadialGrid& grid, int max_mode) {
  ModeField out(p.params(), grid, max_mode);
  for (const auto& [key, c] : p.terms()) {
    if (key.m > max_mode) throw GridError("polynomial angular frequency exceeds the field's max mode");
    const double gamma = key.gamma.get_d();
    const double coeff = c.get_d();
    auto& v = out.mode(key.m, key.trig);
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] += coeff * std::pow(grid[i], gamma);
  }
  return out;
}

double interpolate(const RadialGrid& grid, const std::vector<double>& values, double rho) {
  if (values.size() != grid.size()) throw GridError("sample vector length does not match grid");
  const std::size_t i = grid.index_below(rho);
  const std::size_t n = grid.size();
  if (rho == grid[i]) return values[i];
  if (i + 1 < n && rho == grid[i + 1]) return values[i + 1];
  constexpr std::size_t kPoints = 6;
  const std::size_t width = std::min(kPoints, n);
  // stencil i-2 .. i+3, shifted to stay inside the grid
  long start = static_cast<long>(i) - 2;
  start = std::clamp<long>(start, 0, static_cast<long>(n - width));
  double acc = 0.0;
  for (std::size_t a = 0; a < width; ++a) {
    const std::size_t ia = static_cast<std::size_t>(start) + a;
    double w = 1.0;
    for (std::size_t b = 0; b < width; ++b) {
      if (b == a) continue;
      const std::size_t ib = static_cast<std::size_t>(start) + b;
      w *= (rho - grid[ib]) / (grid[ia] - grid[ib]);
    }
    acc += w * values[ia];
  }
  return acc;
}

double synthesize(const ModeField& mf, const ConePoint& p) {
  if (!mf.grid().contains(p.rho)) throw ExtrapolationError("synthesize: radius outside grid range");
  double acc = 0.0;
  for (const auto& [key, values] : mf.modes()) {
    const double c = interpolate(mf.grid(), values, p.rho);
    if (c == 0.0) continue;
    acc += c * (key.trig == Trig::Cos ? std::cos(key.m * p.theta) : std::sin(key.m * p.theta));
  }
  return acc;
}

ConeFunction as_function(const ModeField& mf) {
  return [mf](const ConePoint& p) { return synthesize(mf, p); };
}

double fd_laplacian(const ConeFunction& u, const ConePoint& sample, double step, const ConeParam& params) {
  if (!(step > 0.0)) throw ParameterError("finite-difference step must be positive");
  if (static_cast<int>(sample.xi.size()) != params.xi_dim()) throw DimensionError("sample xi dimension");
  const double rho = sample.rho;
  if (rho < 4.0 * step) throw DomainError("stencil reaches the apex: need rho >= 4 step");
  const double h = step;
  auto at = [&](double r, double th) {
    ConePoint p(r, th, sample.xi);
    return u(p);
  };
  const double u0 = u(sample);
  const double up = at(rho + h, sample.theta);
  const double um = at(rho - h, sample.theta);
  double lap = (up - 2.0 * u0 + um) / (h * h) + (up - um) / (2.0 * h * rho);
  // angular step with arc length h
  const double k = h / (params.beta_d() * rho);
  const double a1 = at(rho, sample.theta + k) + at(rho, sample.theta - k);
  const double a2 = at(rho, sample.theta + 2.0 * k) + at(rho, sample.theta - 2.0 * k);
  const double d2theta = (16.0 * a1 - a2 - 30.0 * u0) / (12.0 * k * k);
  lap += d2theta / (params.beta_d() * params.beta_d() * rho * rho);
  for (std::size_t i = 0; i < sample.xi.size(); ++i) {
    ConePoint p = sample;
    p.xi[i] += h;
    const double xp = u(p);
    p.xi[i] -= 2.0 * h;
    const double xm = u(p);
    lap += (xp - 2.0 * u0 + xm) / (h * h);
  }
  return lap;
}

double laplacian_residual(const ConeFunction& u, const ConeFunction& f, const ConePoint& sample, double step,
                          const ConeParam& params) {
  return fd_laplacian(u, sample, step, params) - f(sample);
}

double weighted_sup(const ModeField& mf, double lo, double hi, const std::function<double(double)>& weight,
                    double noise) {
  const int n = angular_samples(mf.max_mode());
  std::vector<std::pair<const std::vector<double>*, std::vector<double>>> tables;
  for (const auto& [key, values] : mf.modes()) {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      t[static_cast<std::size_t>(j)] = key.trig == Trig::Cos ? std::cos(key.m * th) : std::sin(key.m * th);
    }
    tables.emplace_back(&values, std::move(t));
  }
  std::vector<double> acc(static_cast<std::size_t>(n));
  double best = 0.0;
  const auto& nodes = mf.grid().nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < lo * (1.0 - 1e-12) || nodes[i] > hi * (1.0 + 1e-12)) continue;
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const auto& [values, t] : tables) {
      const double c = (*values)[i];
      if (c == 0.0) continue;
      for (int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)] += c * t[static_cast<std::size_t>(j)];
    }
    const double w = weight(nodes[i]);
    for (double v : acc) {
      if (std::fabs(v) > noise) best = std::max(best, std::fabs(v) / w);
    }
  }
  return best;
}

double power_weighted_sup(const ModeField& mf, double lo, double hi, double power, double noise) {
  return weighted_sup(mf, lo, hi, [power](double r) { return std::pow(r, power); }, noise);
}

std::string to_csv(const ModeField& mf) {
  std::string out = "rho,m,trig,value\n";
  char buf[128];
  for (std::size_t i = 0; i < mf.grid().size(); ++i) {
    for (const auto& [key, values] : mf.modes()) {
      std::snprintf(buf, sizeof buf, "%.17g,%d,%s,%.17g\n", mf.grid()[i], key.m, to_string(key.trig), values[i]);
      out += buf;
    }
  }
  return out;
}

ModeField mode_field_from_csv(const std::string& text, const ConeParam& params) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> rhos;
  std::vector<std::tuple<double, ModeKey, double>> rows;
  int max_mode = 0;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("rho", 0) == 0) continue;
    }
    std::istringstream ls(line);
    std::string f_rho, f_m, f_trig, f_val;
    if (!std::getline(ls, f_rho, ',') || !std::getline(ls, f_m, ',') || !std::getline(ls, f_trig, ',') ||
        !std::getline(ls, f_val)) {
      throw ParseError("mode CSV row needs rho,m,trig,value: " + line);
    }
    try {
      const double rho = std::stod(f_rho);
      const int m = std::stoi(f_m);
      const double v = std::stod(f_val);
      rows.emplace_back(rho, ModeKey{m, parse_trig(f_trig)}, v);
      if (rhos.empty() || rhos.back() != rho) rhos.push_back(rho);
      max_mode = std::max(max_mode, m);
    } catch (const std::logic_error&) {
      throw ParseError("bad number in mode CSV row: " + line);
    }
  }
  if (rhos.size() < 2) throw ParseError("mode CSV needs at least two radii");
  const double octaves = std::log2(rhos.back() / rhos.front());
  const int ppo = static_cast<int>(std::lround(static_cast<double>(rhos.size() - 1) / octaves));
  RadialGrid grid(rhos.front(), rhos.back(), std::max(ppo, 1));
  if (grid.size() != rhos.size()) throw ParseError("mode CSV radii are not a geometric grid");
  ModeField mf(params, grid, max_mode);
  std::size_t i = 0;
  for (const auto& [rho, key, v] : rows) {
    while (i + 1 < rhos.size() && rhos[i] != rho) ++i;
    mf.mode(key.m, key.trig)[i] = v;
  }
  return mf;
}

}  // namespace conic
