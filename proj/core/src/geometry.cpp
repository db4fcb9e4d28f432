#include "conic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conic/errors.hpp"

namespace conic {

ConeParam::ConeParam(Rational beta, int xi_dim) : beta_(std::move(beta)), xi_dim_(xi_dim) {
  beta_.canonicalize();
  if (beta_ <= 0) throw ParameterError("cone parameter beta must be positive");
  if (xi_dim_ < 0) throw ParameterError("xi_dim must be nonnegative");
  beta_d_ = beta_.get_d();
}

double ConeParam::c_beta() const noexcept { return 0.25 * std::min(1.0, beta_d_); }

void ConeParam::require_planar() const {
  if (xi_dim_ != 0) {
    throw ParameterError("grid numerics support only the 2-D cone (xi_dim = 0)");
  }
}

double wrap_angle(double theta) noexcept {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

ConePoint::ConePoint(double rho_, double theta_, std::vector<double> xi_)
    : rho(rho_), theta(wrap_angle(theta_)), xi(std::move(xi_)) {
  if (!(rho >= 0.0)) throw DomainError("rho must be nonnegative");
  if (rho == 0.0) theta = 0.0;
}

ConePoint ExactConePoint::to_point() const {
  std::vector<double> x;
  x.reserve(xi.size());
  for (const auto& v : xi) x.push_back(v.get_d());
  return ConePoint(rho.get_d(), kTwoPi * turns.get_d(), std::move(x));
}

double cone_distance(const ConePoint& a, const ConePoint& b, const ConeParam& params) {
  if (a.xi.size() != b.xi.size() || static_cast<int>(a.xi.size()) != params.xi_dim()) {
    throw DimensionError("cone_distance: xi dimensions do not match the cone parameters");
  }
  double dtheta = std::fabs(a.theta - b.theta);
  dtheta = std::min(dtheta, kTwoPi - dtheta);
  const double angle = params.beta_d() * dtheta;
  double planar2;
  if (angle >= std::numbers::pi) {
    planar2 = (a.rho + b.rho) * (a.rho + b.rho);
  } else {
    const double s = std::sin(0.5 * angle);
    planar2 = (a.rho - b.rho) * (a.rho - b.rho) + 4.0 * a.rho * b.rho * s * s;
  }
  double xi2 = 0.0;
  for (std::size_t i = 0; i < a.xi.size(); ++i) {
    const double d = a.xi[i] - b.xi[i];
    xi2 += d * d;
  }
  return std::sqrt(planar2 + xi2);
}

double apex_distance(const ConePoint& p) noexcept {
  double s = p.rho * p.rho;
  for (double v : p.xi) s += v * v;
  return std::sqrt(s);
}

DegreeSet::DegreeSet(Rational beta) : beta_(std::move(beta)) {
  beta_.canonicalize();
  if (beta_ <= 0) throw ParameterError("beta must be positive");
  inv_beta_ = 1 / beta_;
}

bool DegreeSet::contains(const Rational& t) const {
  if (t < 0) return false;
  // k / beta <= t bounds k by t * beta.
  const Rational kmax = floor_of(t * beta_);
  for (mpz_class k = 0; k <= kmax.get_num(); ++k) {
    const Rational rest = t - Rational(k) * inv_beta_;
    if (rest >= 0 && is_integer(rest)) return true;
  }
  return false;
}

Rational DegreeSet::next_above(const Rational& t) const {
  if (t < 0) throw ParameterError("next_degree_above requires t >= 0");
  const Rational kmax = floor_of(t * beta_) + 1;
  Rational best = floor_of(t) + 1;  // k = 0
  for (mpz_class k = 1; k <= kmax.get_num(); ++k) {
    const Rational base = Rational(k) * inv_beta_;
    Rational j = 0;
    if (base <= t) j = floor_of(t - base) + 1;
    const Rational cand = base + j;
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<Rational> DegreeSet::elements_up_to(const Rational& bound) const {
  std::vector<Rational> out;
  if (bound < 0) return out;
  const Rational kmax = floor_of(bound * beta_);
  for (mpz_class k = 0; k <= kmax.get_num(); ++k) {
    const Rational base = Rational(k) * inv_beta_;
    for (Rational v = base; v <= bound; v += 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool degree_set_contains(const Rational& t, const DegreeSet& ds) { return ds.contains(t); }

Rational next_degree_above(const Rational& t, const DegreeSet& ds) { return ds.next_above(t); }

bool degree_set_near(double t, const DegreeSet& ds, double tol) {
  if (t < -tol) return false;
  const double inv_beta = 1.0 / ds.beta().get_d();
  const auto kmax = static_cast<long>(std::floor((t + tol) / inv_beta));
  for (long k = 0; k <= kmax; ++k) {
    const double rest = t - static_cast<double>(k) * inv_beta;
    if (rest < -tol) break;
    if (std::fabs(rest - std::round(rest)) <= tol) return true;
  }
  return false;
}

namespace {

void require_xi(const ConePoint& p, const ConeParam& params) {
  if (static_cast<int>(p.xi.size()) != params.xi_dim()) {
    throw DimensionError("point xi dimension does not match the cone parameters");
  }
}

Rational frac_part(const Rational& t) { return t - floor_of(t); }

}  // namespace

ConePoint scale_map(const ConePoint& x, const ConePoint& z, const ConeParam& params) {
  require_xi(x, params);
  require_xi(z, params);
  if (x.rho <= 0.0) throw SingularBaseError("scale map requires rho(x) > 0");
  std::vector<double> xi(z.xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = (z.xi[i] - x.xi[i]) / x.rho;
  return ConePoint(z.rho / x.rho, z.theta - x.theta, std::move(xi));
}

ConePoint inverse_scale_map(const ConePoint& x, const ConePoint& y, const ConeParam& params) {
  require_xi(x, params);
  require_xi(y, params);
  if (x.rho <= 0.0) throw SingularBaseError("scale map requires rho(x) > 0");
  std::vector<double> xi(y.xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = x.xi[i] + x.rho * y.xi[i];
  return ConePoint(x.rho * y.rho, x.theta + y.theta, std::move(xi));
}

ExactConePoint scale_map(const ExactConePoint& x, const ExactConePoint& z, const ConeParam& params) {
  if (static_cast<int>(x.xi.size()) != params.xi_dim() || x.xi.size() != z.xi.size()) {
    throw DimensionError("point xi dimension does not match the cone parameters");
  }
  if (x.rho <= 0) throw SingularBaseError("scale map requires rho(x) > 0");
  ExactConePoint out;
  out.rho = z.rho / x.rho;
  out.turns = frac_part(z.turns - x.turns);
  out.xi.resize(z.xi.size());
  for (std::size_t i = 0; i < z.xi.size(); ++i) out.xi[i] = (z.xi[i] - x.xi[i]) / x.rho;
  return out;
}

ExactConePoint inverse_scale_map(const ExactConePoint& x, const ExactConePoint& y,
                                 const ConeParam& params) {
  if (static_cast<int>(x.xi.size()) != params.xi_dim() || x.xi.size() != y.xi.size()) {
    throw DimensionError("point xi dimension does not match the cone parameters");
  }
  if (x.rho <= 0) throw SingularBaseError("scale map requires rho(x) > 0");
  ExactConePoint out;
  out.rho = x.rho * y.rho;
  out.turns = frac_part(x.turns + y.turns);
  out.xi.resize(y.xi.size());
  for (std::size_t i = 0; i < y.xi.size(); ++i) out.xi[i] = x.xi[i] + x.rho * y.xi[i];
  return out;
}

ConePoint unit_reference_point(const ConeParam& params) {
  return ConePoint(1.0, 0.0, std::vector<double>(static_cast<std::size_t>(params.xi_dim()), 0.0));
}

ConeFunction pushforward(const ConePoint& x, ConeFunction f, const ConeParam& params) {
  if (x.rho <= 0.0) throw SingularBaseError("pushforward requires rho(x) > 0");
  return [x, f = std::move(f), params](const ConePoint& y) {
    return f(inverse_scale_map(x, y, params));
  };
}

ConePoint flat_offset(const ConePoint& p, double dx, double dy, std::span<const double> dxi,
                      const ConeParam& params) {
  const double X = p.rho + dx;
  const double Y = dy;
  const double rho = std::hypot(X, Y);
  const double theta = p.theta + std::atan2(Y, X) / params.beta_d();
  std::vector<double> xi = p.xi;
  for (std::size_t i = 0; i < xi.size() && i < dxi.size(); ++i) xi[i] += dxi[i];
  return ConePoint(rho, theta, std::move(xi));
}

ConePoint parse_point(std::string_view text, int xi_dim) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string token(text.substr(start, comma - start));
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw ParseError("trailing characters in '" + token + "'");
    } catch (const std::logic_error&) {
      throw ParseError("malformed point coordinate '" + token + "'");
    }
    start = comma + 1;
  }
  if (values.size() != static_cast<std::size_t>(2 + xi_dim)) {
    throw DimensionError("point '" + std::string(text) + "' does not have 2 + xi_dim coordinates");
  }
  return ConePoint(values[0], values[1], std::vector<double>(values.begin() + 2, values.end()));
}

}  // namespace conic
