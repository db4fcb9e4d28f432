#include "conic/expansion.hpp"

#include <algorithm>
#include <cmath>

#include "conic/errors.hpp"

namespace conic {

ModeField solve_dirichlet(const BoundaryFunction& g, const ConeParam& params, const RadialGrid& grid,
                          int max_mode) {
  const ModeField boundary = analyze([&](const ConePoint& p) { return g(p.theta); }, params,
                                     RadialGrid(1.0, 2.0, 1), max_mode);
  ModeField u(params, grid, max_mode);
  for (const auto& [key, values] : boundary.modes()) {
    const double coeff = values.front();
    if (coeff == 0.0) continue;
    const double nu = key.m / params.beta_d();
    auto& out = u.mode(key.m, key.trig);
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = coeff * std::pow(grid[i], nu);
  }
  return u;
}

bool is_harmonic_resonant(double q, const Rational& beta, double tol) {
  const double kq = q * beta.get_d();
  return kq >= -tol && std::fabs(kq - std::round(kq)) <= tol * std::max(1.0, std::fabs(kq));
}

HarmonicExpansion extract_coeffs(const ModeField& u, double q, double rho_star) {
  if (!(rho_star > 0.0) || rho_star > 0.25) throw ParameterError("extraction radius must lie in (0, 1/4]");
  if (!(q > 0.0)) throw ParameterError("expansion order must be positive");
  const Rational& beta = u.params().beta();
  if (is_harmonic_resonant(q, beta)) throw ResonantOrderError("expansion order q is a harmonic degree k/beta");
  if (!u.grid().contains(rho_star)) throw GridError("extraction radius outside the grid");

  HarmonicExpansion out;
  out.beta = beta;
  out.q = q;
  out.rho_star = rho_star;
  const double b = u.params().beta_d();
  for (int k = 0; k <= u.max_mode() && k / b < q; ++k) {
    const double degree = k / b;
    const double scale = std::pow(rho_star, degree);
    HarmonicCoeff c{k, u.mode_value(k, Trig::Cos, rho_star) / scale, 0.0, degree};
    if (k > 0) c.b = u.mode_value(k, Trig::Sin, rho_star) / scale;
    out.coeffs.push_back(c);
  }

  // residual modes, then sup over a full angular sample at every node
  const int n = angular_samples(u.max_mode());
  const auto& nodes = u.grid().nodes();
  std::vector<double> r(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < nodes.size() && nodes[i] <= rho_star * (1.0 + 1e-12); ++i) {
    std::fill(r.begin(), r.end(), 0.0);
    for (const auto& [key, values] : u.modes()) {
      double v = values[i];
      if (key.m / b < q) {
        const auto& c = out.coeffs[static_cast<std::size_t>(key.m)];
        v -= (key.trig == Trig::Cos ? c.a : c.b) * std::pow(nodes[i], c.degree);
      }
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        const double th = kTwoPi * j / n;
        r[static_cast<std::size_t>(j)] += v * (key.trig == Trig::Cos ? std::cos(key.m * th) : std::sin(key.m * th));
      }
    }
    const double denom = std::pow(nodes[i], q);
    for (double v : r) out.remainder_seminorm = std::max(out.remainder_seminorm, std::fabs(v) / denom);
  }
  return out;
}

FPolynomial expansion_of_dyadic_piece(const ModeField& w, int level, double q_plus_2, double radius) {
  if (level < 0) throw ParameterError("level must be nonnegative");
  const double r = radius * std::ldexp(1.0, -level - 2);
  if (!w.grid().contains(r)) throw GridError("extraction radius outside the grid");
  FPolynomial p(w.params());
  const double b = w.params().beta_d();
  const MultiIndex none;
  for (int k = 0; k <= w.max_mode() && k / b < q_plus_2; ++k) {
    const double scale = std::pow(r, k / b);
    const double a = w.mode_value(k, Trig::Cos, r) / scale;
    p += FPolynomial::t_monomial(w.params(), from_double(a), 0, k, k, Trig::Cos, none);
    if (k > 0) {
      const double s = w.mode_value(k, Trig::Sin, r) / scale;
      p += FPolynomial::t_monomial(w.params(), from_double(s), 0, k, k, Trig::Sin, none);
    }
  }
  return p;
}

}  // namespace conic
