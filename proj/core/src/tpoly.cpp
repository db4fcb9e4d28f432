#include "conic/tpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "conic/errors.hpp"

namespace conic {

const char* to_string(Trig t) noexcept { return t == Trig::Cos ? "cos" : "sin"; }

Trig parse_trig(std::string_view s) {
  if (s == "cos") return Trig::Cos;
  if (s == "sin") return Trig::Sin;
  throw ParseError("trig must be 'cos' or 'sin', got '" + std::string(s) + "'");
}

bool operator<(const MonomialKey& a, const MonomialKey& b) {
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  if (a.m != b.m) return a.m < b.m;
  if (a.trig != b.trig) return a.trig < b.trig;
  return a.sigma < b.sigma;
}

std::optional<std::pair<long, long>> t_decomposition(const MonomialKey& key, const Rational& beta) {
  if (key.m < 0) return std::nullopt;
  if (key.trig == Trig::Sin && key.m == 0) return std::nullopt;
  const Rational inv_beta = 1 / beta;
  for (long k = key.m;; k += 2) {
    const Rational rest = key.gamma - Rational(k) * inv_beta;
    if (rest < 0) break;
    const Rational j = rest / 2;
    if (is_integer(j)) return std::make_pair(j.get_num().get_si(), k);
  }
  return std::nullopt;
}

bool is_t_monomial(const MonomialKey& key, const Rational& beta) {
  return t_decomposition(key, beta).has_value();
}

bool is_xbeta_monomial(const MonomialKey& key, const Rational& beta) {
  if (key.trig == Trig::Sin && key.m == 0) return false;
  const Rational rest = key.gamma - Rational(key.m) / beta;
  if (rest < 0) return false;
  return is_integer(Rational(rest / 2));
}

FPolynomial::FPolynomial(ConeParam params) : params_(std::move(params)) {}

FPolynomial FPolynomial::constant(const ConeParam& params, const Rational& c) {
  FPolynomial p(params);
  p.add_term(MonomialKey{0, 0, Trig::Cos, MultiIndex::zeros(static_cast<std::size_t>(params.xi_dim()))}, c);
  return p;
}

FPolynomial FPolynomial::monomial(const ConeParam& params, const Rational& coeff, const Rational& gamma, int m,
                                  Trig trig, MultiIndex sigma) {
  FPolynomial p(params);
  p.add_term(MonomialKey{gamma, m, trig, std::move(sigma)}, coeff);
  return p;
}

FPolynomial FPolynomial::t_monomial(const ConeParam& params, const Rational& coeff, long j, long k, int m,
                                    Trig trig, MultiIndex sigma) {
  if (j < 0 || k < m || (k - m) % 2 != 0) {
    throw ValidityError("T-monomial needs j >= 0 and k - m a nonnegative even integer");
  }
  const Rational gamma = Rational(2 * j) + Rational(k) / params.beta();
  return monomial(params, coeff, gamma, m, trig, std::move(sigma));
}

void FPolynomial::add_term(const MonomialKey& key, const Rational& coeff) {
  if (static_cast<int>(key.sigma.size()) != params_.xi_dim()) {
    throw DimensionError("monomial sigma length does not match xi_dim");
  }
  if (key.m < 0) throw ParameterError("angular frequency must be nonnegative");
  // GMP comparisons assume canonical form, so inputs like 38/12 are reduced here.
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return;
  if (key.trig == Trig::Sin && key.m == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FPolynomial::require_compatible(const FPolynomial& other) const {
  if (!(params_ == other.params_)) throw ParameterError("polynomials over different cones");
}

FPolynomial& FPolynomial::operator+=(const FPolynomial& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

FPolynomial& FPolynomial::operator-=(const FPolynomial& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

FPolynomial FPolynomial::operator+(const FPolynomial& other) const {
  FPolynomial out(*this);
  out += other;
  return out;
}

FPolynomial FPolynomial::operator-(const FPolynomial& other) const {
  FPolynomial out(*this);
  out -= other;
  return out;
}

FPolynomial FPolynomial::scaled(const Rational& c) const {
  FPolynomial out(params_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

Rational FPolynomial::max_abs_coefficient() const {
  Rational best = 0;
  for (const auto& [k, c] : terms_) best = std::max(best, abs_of(c));
  return best;
}

bool is_t_polynomial(const FPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& kv) { return is_t_monomial(kv.first, p.params().beta()); });
}

bool is_xbeta_polynomial(const FPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& kv) { return is_xbeta_monomial(kv.first, p.params().beta()); });
}

std::vector<std::pair<MonomialKey, bool>> validity_flags(const FPolynomial& p) {
  std::vector<std::pair<MonomialKey, bool>> out;
  out.reserve(p.size());
  for (const auto& [k, c] : p.terms()) out.emplace_back(k, is_t_monomial(k, p.params().beta()));
  return out;
}

Rational degree(const FPolynomial& p) {
  if (p.is_zero()) throw UndefinedDegreeError("degree of the zero polynomial is undefined");
  Rational best = p.terms().begin()->first.degree();
  for (const auto& [k, c] : p.terms()) best = std::max(best, k.degree());
  return best;
}

FPolynomial multiply(const FPolynomial& p, const FPolynomial& q) {
  if (!(p.params() == q.params())) throw ParameterError("polynomials over different cones");
  FPolynomial out(p.params());
  const Rational half(1, 2);
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      const Rational c = ca * cb * half;
      const Rational gamma = a.gamma + b.gamma;
      const MultiIndex sigma = a.sigma + b.sigma;
      const int sum = a.m + b.m;
      const int diff = a.m - b.m;
      const int adiff = std::abs(diff);
      // sin(-x) = -sin(x)
      const Rational sdiff = diff >= 0 ? c : Rational(-c);
      if (a.trig == Trig::Cos && b.trig == Trig::Cos) {
        out.add_term({gamma, adiff, Trig::Cos, sigma}, c);
        out.add_term({gamma, sum, Trig::Cos, sigma}, c);
      } else if (a.trig == Trig::Sin && b.trig == Trig::Sin) {
        out.add_term({gamma, adiff, Trig::Cos, sigma}, c);
        out.add_term({gamma, sum, Trig::Cos, sigma}, -c);
      } else if (a.trig == Trig::Sin) {
        // sin a cos b = (sin(a+b) + sin(a-b)) / 2
        out.add_term({gamma, sum, Trig::Sin, sigma}, c);
        out.add_term({gamma, adiff, Trig::Sin, sigma}, sdiff);
      } else {
        // cos a sin b = (sin(a+b) - sin(a-b)) / 2
        out.add_term({gamma, sum, Trig::Sin, sigma}, c);
        out.add_term({gamma, adiff, Trig::Sin, sigma}, -sdiff);
      }
    }
  }
  return out;
}

FPolynomial laplacian(const FPolynomial& p) {
  FPolynomial out(p.params());
  const Rational inv_beta2 = 1 / (p.params().beta() * p.params().beta());
  for (const auto& [key, c] : p.terms()) {
    const Rational radial = key.gamma * key.gamma - Rational(key.m * key.m) * inv_beta2;
    out.add_term({key.gamma - 2, key.m, key.trig, key.sigma}, c * radial);
    for (std::size_t i = 0; i < key.sigma.size(); ++i) {
      const int s = key.sigma[i];
      if (s >= 2) out.add_term({key.gamma, key.m, key.trig, key.sigma.with(i, s - 2)}, c * (s * (s - 1)));
    }
  }
  return out;
}

namespace {

int max_sigma_total(const FPolynomial& p) {
  int s = 0;
  for (const auto& [k, c] : p.terms()) s = std::max(s, k.sigma.total());
  return s;
}

}  // namespace

Rational poisson_coefficient_bound(const FPolynomial& f) {
  // Lift divisors satisfy (gamma+2)^2 - (m/beta)^2 >= 4 gamma + 4 >= 4 on T-monomials;
  // each round feeds at most xi_dim parents, each scaled by sigma_i (sigma_i - 1) <= s (s - 1).
  const int s = max_sigma_total(f);
  const int rounds = s / 2;
  const Rational kappa = Rational(f.params().xi_dim() * s * std::max(s - 1, 0), 4);
  Rational a = 1;
  for (int t = 0; t < rounds; ++t) a = 1 + kappa * a;
  return a / 4;
}

PoissonLift solve_poisson_detailed(const FPolynomial& f) {
  if (!is_t_polynomial(f)) throw ValidityError("solve_poisson: input is not a T-polynomial");
  const Rational inv_beta2 = 1 / (f.params().beta() * f.params().beta());
  FPolynomial u(f.params());
  FPolynomial residual = f;
  int depth = 0;
  while (!residual.is_zero()) {
    ++depth;
    const int top = max_sigma_total(residual);
    FPolynomial lift(f.params());
    for (const auto& [key, c] : residual.terms()) {
      if (key.sigma.total() != top) continue;
      const Rational g2 = key.gamma + 2;
      const Rational divisor = g2 * g2 - Rational(key.m * key.m) * inv_beta2;
      if (divisor == 0) throw ValidityError("solve_poisson: resonant lift divisor");
      lift.add_term({g2, key.m, key.trig, key.sigma}, c / divisor);
    }
    u += lift;
    residual -= laplacian(lift);
  }
  return PoissonLift{std::move(u), depth, poisson_coefficient_bound(f)};
}

FPolynomial solve_poisson(const FPolynomial& f) { return solve_poisson_detailed(f).u; }

FPolynomial truncate_below(const FPolynomial& p, const Rational& q) {
  FPolynomial out(p.params());
  for (const auto& [k, c] : p.terms()) {
    if (k.degree() < q) out.add_term(k, c);
  }
  return out;
}

namespace {

void require_dims(const FPolynomial& p, const ConePoint& x) {
  if (static_cast<int>(x.xi.size()) != p.params().xi_dim()) {
    throw DimensionError("evaluation point xi dimension does not match the polynomial");
  }
}

double rho_power(double rho, double gamma) {
  if (rho == 0.0) {
    if (gamma == 0.0) return 1.0;
    if (gamma > 0.0) return 0.0;
    throw SingularEvaluationError("negative rho exponent evaluated at the apex");
  }
  if (gamma == 0.0) return 1.0;
  return std::exp(gamma * std::log(rho));
}

// d^b/dtheta^b of trig(m theta).
double trig_derivative(Trig trig, int m, double theta, int b) {
  const double mt = m * theta;
  // cycle of cos: cos, -sin, -cos, sin
  const int phase = (trig == Trig::Cos ? 0 : 3) + b;
  double v = 0.0;
  switch (phase % 4) {
    case 0: v = std::cos(mt); break;
    case 1: v = -std::sin(mt); break;
    case 2: v = -std::cos(mt); break;
    default: v = std::sin(mt); break;
  }
  return v * std::pow(static_cast<double>(m), b);
}

}  // namespace

double evaluate(const FPolynomial& p, const ConePoint& x) {
  return evaluate_derivative(p, x, 0, 0, MultiIndex::zeros(x.xi.size()));
}

double evaluate_derivative(const FPolynomial& p, const ConePoint& x, int a, int b, const MultiIndex& tau) {
  require_dims(p, x);
  if (tau.size() != x.xi.size()) throw DimensionError("derivative multi-index has wrong length");
  double acc = 0.0;
  for (const auto& [key, c] : p.terms()) {
    const double gamma = key.gamma.get_d();
    double falling = 1.0;
    for (int i = 0; i < a; ++i) falling *= gamma - i;
    if (falling == 0.0) continue;
    double xi_part = 1.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const int s = key.sigma[i];
      const int t = tau[i];
      if (t > s) {
        xi_part = 0.0;
        break;
      }
      for (int r = 0; r < t; ++r) xi_part *= s - r;
      xi_part *= std::pow(x.xi[i], s - t);
    }
    if (xi_part == 0.0) continue;
    const double trig = trig_derivative(key.trig, key.m, x.theta, b);
    if (trig == 0.0) continue;
    acc += c.get_d() * falling * rho_power(x.rho, gamma - a) * trig * xi_part;
  }
  return acc;
}

ConeFunction as_function(const FPolynomial& p) {
  return [p](const ConePoint& x) { return evaluate(p, x); };
}

namespace {

struct DerivativeOrder {
  int a;
  int b;
  MultiIndex tau;
};

std::vector<DerivativeOrder> derivative_orders(std::size_t xi_dim, int l) {
  std::vector<DerivativeOrder> out;
  for (const auto& idx : all_multi_indices(2 + xi_dim, l)) {
    std::vector<int> tau(idx.entries().begin() + 2, idx.entries().end());
    out.push_back({idx[0], idx[1], MultiIndex(std::move(tau))});
  }
  return out;
}

std::vector<ConePoint> ball_samples(const ConePoint& center, double radius, const ConeParam& params,
                                    int per_axis) {
  const std::size_t dims = 2 + center.xi.size();
  std::vector<ConePoint> out;
  std::vector<int> idx(dims, 0);
  std::vector<double> dxi(center.xi.size());
  const double step = per_axis > 1 ? 2.0 * radius / (per_axis - 1) : 0.0;
  while (true) {
    double r2 = 0.0;
    std::vector<double> off(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      off[d] = per_axis > 1 ? -radius + step * idx[d] : 0.0;
      r2 += off[d] * off[d];
    }
    // keep strictly inside, shrunk slightly so boundary samples are not dropped by rounding
    if (r2 <= radius * radius * (1.0 - 1e-12)) {
      for (std::size_t i = 0; i < dxi.size(); ++i) dxi[i] = off[2 + i];
      out.push_back(flat_offset(center, off[0], off[1], dxi, params));
    }
    std::size_t d = 0;
    while (d < dims && ++idx[d] == per_axis) idx[d++] = 0;
    if (d == dims) break;
  }
  if (out.empty()) out.push_back(center);
  return out;
}

}  // namespace

double sampled_cl_norm(const FPolynomial& f, const ConePoint& center, double radius, int l,
                       int samples_per_axis) {
  if (l < 0) throw ParameterError("derivative order must be nonnegative");
  const auto orders = derivative_orders(center.xi.size(), l);
  double best = 0.0;
  for (const auto& p : ball_samples(center, radius, f.params(), samples_per_axis)) {
    for (const auto& o : orders) best = std::max(best, std::fabs(evaluate_derivative(f, p, o.a, o.b, o.tau)));
  }
  return best;
}

double scaled_monomial_norm(const FPolynomial& f, const ConePoint& x, int l, int samples_per_axis) {
  const ConeParam& params = f.params();
  if (x.rho <= 0.0) throw SingularBaseError("scaled_monomial_norm requires rho(x) > 0");
  if (x.rho >= 0.5) throw DomainError("scaled_monomial_norm requires rho(x) < 1/2");
  if (std::any_of(x.xi.begin(), x.xi.end(), [](double v) { return v != 0.0; })) {
    throw DomainError("scaled_monomial_norm requires xi(x) = 0");
  }
  if (l < 0 || l > 4) throw ParameterError("scaled_monomial_norm supports 0 <= l <= 4");
  const auto orders = derivative_orders(x.xi.size(), l);
  const ConePoint ref = unit_reference_point(params);
  double best = 0.0;
  for (const auto& z : ball_samples(ref, params.c_beta(), params, samples_per_axis)) {
    const ConePoint y = inverse_scale_map(x, z, params);
    for (const auto& o : orders) {
      // d/d rho~ = rho_x d/d rho, d/d xi~ = rho_x d/d xi, d/d theta~ = d/d theta
      const double scale = std::pow(x.rho, o.a + o.tau.total());
      best = std::max(best, scale * std::fabs(evaluate_derivative(f, y, o.a, o.b, o.tau)));
    }
  }
  return best;
}

std::vector<MonomialKey> t_monomial_basis(const ConeParam& params, const Rational& q, bool inclusive) {
  std::set<MonomialKey> keys;
  const Rational inv_beta = 1 / params.beta();
  auto below = [&](const Rational& d) { return inclusive ? d <= q : d < q; };
  if (q < 0) return {};
  const int max_sigma = static_cast<int>(floor_of(q).get_num().get_si());
  for (const auto& sigma : all_multi_indices(static_cast<std::size_t>(params.xi_dim()), max_sigma)) {
    for (long k = 0; below(Rational(k) * inv_beta + sigma.total()); ++k) {
      for (long j = 0;; ++j) {
        const Rational gamma = Rational(2 * j) + Rational(k) * inv_beta;
        if (!below(gamma + sigma.total())) break;
        for (long m = k; m >= 0; m -= 2) {
          keys.insert({gamma, static_cast<int>(m), Trig::Cos, sigma});
          if (m > 0) keys.insert({gamma, static_cast<int>(m), Trig::Sin, sigma});
        }
      }
    }
  }
  return {keys.begin(), keys.end()};
}

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 8);
  std::uniform_int_distribution<int> den(1, 6);
  int n = num(rng);
  if (n >= 0) ++n;  // skip zero
  return Rational(n, den(rng));
}

FPolynomial random_from_basis(const ConeParam& params, std::mt19937_64& rng, std::vector<MonomialKey> basis,
                              int max_terms) {
  FPolynomial p(params);
  if (basis.empty()) return p;
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p.add_term(basis[pick(rng)], random_coefficient(rng));
  return p;
}

}  // namespace

FPolynomial random_t_polynomial(const ConeParam& params, std::mt19937_64& rng, const Rational& max_degree,
                                int max_sigma, int max_terms) {
  auto basis = t_monomial_basis(params, max_degree, true);
  std::erase_if(basis, [&](const MonomialKey& k) { return k.sigma.total() > max_sigma; });
  return random_from_basis(params, rng, std::move(basis), max_terms);
}

FPolynomial random_xbeta_polynomial(const ConeParam& params, std::mt19937_64& rng, const Rational& max_degree,
                                    int max_sigma, int max_terms) {
  auto basis = t_monomial_basis(params, max_degree, true);
  std::erase_if(basis, [&](const MonomialKey& k) {
    return k.sigma.total() > max_sigma || !is_xbeta_monomial(k, params.beta());
  });
  return random_from_basis(params, rng, std::move(basis), max_terms);
}

std::string to_display_string(const FPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (k.gamma != 0) os << " rho^(" << to_string(k.gamma) << ")";
    if (!(k.m == 0 && k.trig == Trig::Cos)) os << " " << to_string(k.trig) << "(" << k.m << "t)";
    for (std::size_t i = 0; i < k.sigma.size(); ++i) {
      if (k.sigma[i] > 0) os << " xi" << (i + 1) << "^" << k.sigma[i];
    }
  }
  return os.str();
}

}  // namespace conic
