#include "conic/norms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "conic/errors.hpp"

namespace conic {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

bool near_integer(double q) { return std::fabs(q - std::round(q)) <= 1e-12 * std::max(1.0, std::fabs(q)); }

// Combinations of xi_values over xi_dim axes.
std::vector<std::vector<double>> xi_grid(int xi_dim, const std::vector<double>& values) {
  std::vector<std::vector<double>> out{{}};
  for (int d = 0; d < xi_dim; ++d) {
    std::vector<std::vector<double>> next;
    for (const auto& base : out) {
      for (double v : values) {
        auto p = base;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> geometric(double lo, double hi, int count) {
  std::vector<double> out;
  if (count <= 1) return {lo};
  for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return out;
}

// Polar sample points with rho in [lo, hi] inside the ball of the plan.
std::vector<ConePoint> polar_samples(const ConeParam& params, const SamplingPlan& plan, double lo, double hi,
                                     int radii, bool include_apex = false) {
  std::vector<ConePoint> out;
  const auto xis = xi_grid(params.xi_dim(), plan.xi_values);
  for (const auto& xi : xis) {
    const double xi2 = std::inner_product(xi.begin(), xi.end(), xi.begin(), 0.0);
    if (include_apex && xi2 < plan.radius * plan.radius) out.emplace_back(0.0, 0.0, xi);
    for (double r : geometric(lo, hi, radii)) {
      if (r * r + xi2 >= plan.radius * plan.radius) continue;
      for (int j = 0; j < plan.angles; ++j) out.emplace_back(r, kTwoPi * (j + 0.25) / plan.angles, xi);
    }
  }
  return out;
}

std::vector<MultiIndex> orders_up_to(std::size_t dims, int k) { return all_multi_indices(dims, k); }

}  // namespace

void SamplingPlan::validate() const {
  if (!(delta > 0.0)) throw ParameterError("plan delta must be positive");
  if (!(fd_step > 0.0) || fd_step > delta / 16.0) throw ParameterError("plan needs 0 < fd_step <= delta / 16");
  if (!(radius > 0.0)) throw ParameterError("plan radius must be positive");
  for (const auto* set : {&increments, &probes}) {
    for (const auto& h : *set) {
      const double n = norm2(h);
      if (n == 0.0) throw ParameterError("plan increment is zero");
      if (n >= delta * (1.0 + 1e-12)) throw ParameterError("plan increment outside B_delta");
    }
  }
  if (octaves < 1 || per_octave < 1 || angles < 1 || interior_radii < 1 || h3_levels < 0 || ball_points < 2) {
    throw ParameterError("plan sample counts must be positive");
  }
  if (!(ball_fraction > 0.0) || ball_fraction > 1.0) throw ParameterError("ball fraction must be in (0, 1]");
  if (!(rho_min > 0.0) || rho_min >= radius) throw ParameterError("rho_min must be in (0, radius)");
  if (xi_values.empty()) throw ParameterError("plan needs at least one xi value");
}

SamplingPlan SamplingPlan::ube_default(int n, double delta, double center_radius, int octaves) {
  if (n < 1) throw DimensionError("UBE plans need n >= 1");
  SamplingPlan plan;
  plan.delta = delta;
  plan.fd_step = delta / 64.0;
  plan.octaves = octaves;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const int per_axis = n <= 2 ? 3 : 2;
  while (true) {
    RnPoint c(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      c[static_cast<std::size_t>(d)] =
          per_axis == 1 ? 0.0 : -center_radius + 2.0 * center_radius * idx[static_cast<std::size_t>(d)] / (per_axis - 1);
    }
    plan.centers.push_back(c);
    int d = 0;
    while (d < n && ++idx[static_cast<std::size_t>(d)] == per_axis) idx[static_cast<std::size_t>(d++)] = 0;
    if (d == n) break;
  }
  std::vector<RnPoint> dirs;
  for (int i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      RnPoint e(static_cast<std::size_t>(n), 0.0);
      e[static_cast<std::size_t>(i)] = s;
      dirs.push_back(e);
    }
    for (int j = i + 1; j < n; ++j) {
      for (double s : {1.0, -1.0}) {
        for (double t : {1.0, -1.0}) {
          RnPoint e(static_cast<std::size_t>(n), 0.0);
          e[static_cast<std::size_t>(i)] = s / std::sqrt(2.0);
          e[static_cast<std::size_t>(j)] = t / std::sqrt(2.0);
          dirs.push_back(e);
        }
      }
    }
  }
  for (int i = 0; i < 2 * octaves; ++i) {
    const double r = 0.99 * delta * std::exp2(-0.5 * i);
    const double rp = 0.99 * delta * std::exp2(-0.5 * i - 0.25);
    for (const auto& e : dirs) {
      RnPoint h(e.size());
      RnPoint p(e.size());
      for (std::size_t d = 0; d < e.size(); ++d) {
        h[d] = r * e[d];
        p[d] = rp * e[d];
      }
      plan.increments.push_back(h);
      plan.probes.push_back(p);
    }
  }
  plan.validate();
  return plan;
}

SamplingPlan SamplingPlan::cone_default(const ConeParam& params, double delta) {
  SamplingPlan plan;
  plan.delta = delta;
  plan.fd_step = std::min(1e-3, delta / 16.0);
  if (params.xi_dim() > 0) plan.xi_values = {-0.5, 0.0, 0.5};
  plan.validate();
  return plan;
}

double NormReport::clause(std::string_view name) const {
  for (const auto& c : clauses) {
    if (c.name == name) return c.value;
  }
  return 0.0;
}

void NormReport::add(std::string name, double value) { clauses.push_back({std::move(name), value}); }

void NormReport::finish() {
  total = 0.0;
  for (const auto& c : clauses) total = combine == "sum" ? total + c.value : std::max(total, c.value);
}

double holder_seminorm(std::span<const double> values, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                       double alpha, const std::function<double(std::size_t, std::size_t)>& metric) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw ParameterError("Hoelder exponent must be in (0, 1)");
  double best = 0.0;
  for (const auto& [i, j] : pairs) {
    const double d = metric(i, j);
    if (!(d > 0.0)) continue;
    best = std::max(best, std::fabs(values[i] - values[j]) / std::pow(d, alpha));
  }
  return best;
}

namespace {

double all_pairs_holder(std::span<const double> values, double alpha,
                        const std::function<double(std::size_t, std::size_t)>& metric) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(values.size() * (values.size() - (values.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) pairs.emplace_back(i, j);
  }
  return holder_seminorm(values, pairs, alpha, metric);
}

}  // namespace

double holder_seminorm(const ConeFunction& u, std::span<const ConePoint> points, double alpha,
                       const ConeParam& params) {
  std::vector<double> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(u(p));
  return all_pairs_holder(values, alpha,
                          [&](std::size_t i, std::size_t j) { return cone_distance(points[i], points[j], params); });
}

double central_derivative(const RnFunction& F, std::span<const double> x, const MultiIndex& sigma, double h) {
  if (sigma.size() != x.size()) throw DimensionError("derivative order length does not match the point");
  if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
  std::vector<double> p(x.begin(), x.end());
  // nested central differences delta^s / h^s with half-integer offsets for odd s
  std::function<double(std::size_t)> rec = [&](std::size_t axis) -> double {
    if (axis == x.size()) return F(p);
    const int s = sigma[axis];
    if (s == 0) return rec(axis + 1);
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= s; ++j) {
      p[axis] = x[axis] + (0.5 * s - j) * h;
      acc += ((j % 2 == 0) ? binom : -binom) * rec(axis + 1);
      binom = binom * (s - j) / (j + 1);
    }
    p[axis] = x[axis];
    return acc / std::pow(h, s);
  };
  return rec(0);
}

namespace {

// sum_{|s| <= k} sup |d^s| + sum_{|s| = k} [d^s]_alpha, from derivative tables.
double ckalpha_from_tables(const std::vector<MultiIndex>& orders, const std::vector<std::vector<double>>& table,
                           int k, double alpha, const std::function<double(std::size_t, std::size_t)>& metric) {
  double total = 0.0;
  for (std::size_t s = 0; s < orders.size(); ++s) {
    double sup = 0.0;
    for (double v : table[s]) sup = std::max(sup, std::fabs(v));
    total += sup;
    if (orders[s].total() == k) total += all_pairs_holder(table[s], alpha, metric);
  }
  return total;
}

}  // namespace

double ckalpha_norm_rn(const RnFunction& f, std::span<const RnPoint> points, int k, double alpha, double h) {
  if (points.empty()) return 0.0;
  const auto orders = orders_up_to(points.front().size(), k);
  std::vector<std::vector<double>> table(orders.size());
  for (std::size_t s = 0; s < orders.size(); ++s) {
    for (const auto& x : points) table[s].push_back(central_derivative(f, x, orders[s], h));
  }
  return ckalpha_from_tables(orders, table, k, alpha, [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t d = 0; d < points[i].size(); ++d) s += (points[i][d] - points[j][d]) * (points[i][d] - points[j][d]);
    return std::sqrt(s);
  });
}

namespace {

Eigen::VectorXd solve_weighted(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.cols() == 0) return Eigen::VectorXd(0);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
  cod.setThreshold(1e-11);
  if (cod.rank() < A.cols()) throw SamplingError("least-squares fit is rank deficient for this sampling plan");
  return cod.solve(b);
}

double monomial_rn(std::span<const double> h, const MultiIndex& s) {
  double v = 1.0;
  for (std::size_t d = 0; d < h.size(); ++d) v *= std::pow(h[d], s[d]);
  return v;
}

}  // namespace

NormReport ube_seminorm_rn(const RnFunction& f, double q, const SamplingPlan& plan) {
  plan.validate();
  if (!(q > 0.0)) throw ParameterError("UBE order must be positive");
  if (near_integer(q)) throw IntegerOrderError("UBE order q must not be an integer");
  if (plan.centers.empty() || plan.increments.empty()) throw SamplingError("UBE plan needs centers and increments");
  const int k = static_cast<int>(std::floor(q));
  const std::size_t n = plan.centers.front().size();
  std::vector<MultiIndex> basis;
  for (const auto& s : all_multi_indices(n, k)) {
    if (s.total() >= 1) basis.push_back(s);
  }

  NormReport report;
  report.kind = "ube";
  double coeff_max = 0.0;
  double rem_max = 0.0;
  RnPoint y(n);
  auto shifted = [&](const RnPoint& x, const RnPoint& h) -> double {
    if (h.size() != n) throw DimensionError("increment dimension does not match the centers");
    for (std::size_t d = 0; d < n; ++d) y[d] = x[d] + h[d];
    return f(y);
  };
  for (const auto& x : plan.centers) {
    if (x.size() != n) throw DimensionError("centers have mixed dimensions");
    const double f0 = f(x);
    const auto rows = static_cast<Eigen::Index>(plan.increments.size());
    Eigen::MatrixXd A(rows, static_cast<Eigen::Index>(basis.size()));
    Eigen::VectorXd b(rows);
    std::vector<double> fh(plan.increments.size());
    for (std::size_t r = 0; r < plan.increments.size(); ++r) {
      const auto& h = plan.increments[r];
      const double w = std::pow(norm2(h), -q);
      fh[r] = shifted(x, h);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w * monomial_rn(h, basis[c]);
      }
      b(static_cast<Eigen::Index>(r)) = w * (fh[r] - f0);
    }
    const Eigen::VectorXd c = solve_weighted(A, b);
    double cmax = std::fabs(f0);
    for (Eigen::Index i = 0; i < c.size(); ++i) cmax = std::max(cmax, std::fabs(c(i)));
    auto poly = [&](const RnPoint& h) {
      double v = f0;
      for (std::size_t i = 0; i < basis.size(); ++i) v += c(static_cast<Eigen::Index>(i)) * monomial_rn(h, basis[i]);
      return v;
    };
    double rem = 0.0;
    for (std::size_t r = 0; r < plan.increments.size(); ++r) {
      rem = std::max(rem, std::fabs(fh[r] - poly(plan.increments[r])) / std::pow(norm2(plan.increments[r]), q));
    }
    for (const auto& h : plan.probes) rem = std::max(rem, std::fabs(shifted(x, h) - poly(h)) / std::pow(norm2(h), q));

    CenterDetail detail;
    detail.center = x;
    std::string coeffs = "[" + std::to_string(f0);
    for (Eigen::Index i = 0; i < c.size(); ++i) coeffs += "," + std::to_string(c(i));
    detail.polynomial = coeffs + "]";
    detail.coefficient_max = cmax;
    detail.remainder_ratio = rem;
    report.centers.push_back(std::move(detail));
    coeff_max = std::max(coeff_max, cmax);
    rem_max = std::max(rem_max, rem);
  }
  report.add("coefficients", coeff_max);
  report.add("remainder", rem_max);
  report.finish();
  return report;
}

namespace {

void require_nonresonant(double q, const ConeParam& params) {
  if (!(q > 0.0)) throw ParameterError("order q must be positive");
  if (degree_set_near(q, DegreeSet(params.beta()), 1e-10)) throw ResonantOrderError("q lies in the degree set");
}

// H2 sample points relative to a singular center: (rho, theta, eta) with
// sqrt(rho^2 + |eta|^2) = r < delta.
// At least 2 m + 2 angles so the highest basis mode does not alias onto a lower one.
std::vector<ConePoint> h2_samples(const ConeParam& params, const SamplingPlan& plan, bool probes, int max_m) {
  const int n = params.xi_dim();
  const int angles = std::max(plan.angles, 2 * max_m + 2);
  std::vector<ConePoint> out;
  const int count = plan.octaves * plan.per_octave;
  const double shift = probes ? 0.5 : 0.0;
  for (int i = 0; i < count; ++i) {
    const double r = 0.99 * plan.delta * std::exp2(-(i + shift) / plan.per_octave);
    for (int j = 0; j < angles; ++j) {
      const double th = kTwoPi * (j + 0.25 + shift) / angles;
      out.emplace_back(r, th, std::vector<double>(static_cast<std::size_t>(n), 0.0));
      for (int a = 0; a < n; ++a) {
        for (double s : {1.0, -1.0}) {
          std::vector<double> eta(static_cast<std::size_t>(n), 0.0);
          eta[static_cast<std::size_t>(a)] = s * r / std::sqrt(2.0);
          out.emplace_back(r / std::sqrt(2.0), th, std::move(eta));
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (double s : {1.0, -1.0}) {
        std::vector<double> eta(static_cast<std::size_t>(n), 0.0);
        eta[static_cast<std::size_t>(a)] = s * r;
        out.emplace_back(0.0, 0.0, std::move(eta));
      }
    }
  }
  return out;
}

ConePoint translate_xi(const ConePoint& rel, const std::vector<double>& center_xi) {
  ConePoint y = rel;
  for (std::size_t i = 0; i < y.xi.size(); ++i) y.xi[i] += center_xi[i];
  return y;
}

bool is_constant_key(const MonomialKey& k) { return k.gamma == 0 && k.m == 0 && k.sigma.total() == 0; }

}  // namespace

TFit fit_t_polynomial(const ConeFunction& u, const std::vector<double>& center_xi, double q, const ConeParam& params,
                      const SamplingPlan& plan) {
  plan.validate();
  require_nonresonant(q, params);
  if (static_cast<int>(center_xi.size()) != params.xi_dim()) throw DimensionError("center xi dimension");
  const Rational qr = from_double(q);
  std::vector<MonomialKey> basis;
  for (auto& k : t_monomial_basis(params, qr)) {
    if (!is_constant_key(k)) basis.push_back(std::move(k));
  }
  const ConePoint center(0.0, 0.0, center_xi);
  const double u0 = u(center);
  int max_m = 0;
  for (const auto& k : basis) max_m = std::max(max_m, static_cast<int>(k.m));
  const auto fit_points = h2_samples(params, plan, false, max_m);
  const auto probe_points = h2_samples(params, plan, true, max_m);

  auto basis_value = [&](const MonomialKey& key, const ConePoint& rel) {
    FPolynomial mono(params);
    mono.add_term(key, 1);
    return evaluate(mono, rel);
  };
  const auto rows = static_cast<Eigen::Index>(fit_points.size());
  Eigen::MatrixXd A(rows, static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXd b(rows);
  std::vector<double> values(fit_points.size());
  for (std::size_t r = 0; r < fit_points.size(); ++r) {
    const auto& rel = fit_points[r];
    const double d = apex_distance(rel);
    const double w = std::pow(d, -q);
    values[r] = u(translate_xi(rel, center_xi));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w * basis_value(basis[c], rel);
    }
    b(static_cast<Eigen::Index>(r)) = w * (values[r] - u0);
  }
  const Eigen::VectorXd c = solve_weighted(A, b);

  TFit fit{FPolynomial(params)};
  fit.P.add_term(MonomialKey{0, 0, Trig::Cos, MultiIndex::zeros(static_cast<std::size_t>(params.xi_dim()))},
                 from_double(u0));
  fit.coefficient_max = std::fabs(u0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double ci = c(static_cast<Eigen::Index>(i));
    fit.P.add_term(basis[i], from_double(ci));
    fit.coefficient_max = std::max(fit.coefficient_max, std::fabs(ci));
  }
  for (std::size_t r = 0; r < fit_points.size(); ++r) {
    const double d = apex_distance(fit_points[r]);
    fit.remainder_ratio = std::max(fit.remainder_ratio, std::fabs(values[r] - evaluate(fit.P, fit_points[r])) / std::pow(d, q));
  }
  for (const auto& rel : probe_points) {
    const double d = apex_distance(rel);
    const double v = u(translate_xi(rel, center_xi));
    fit.remainder_ratio = std::max(fit.remainder_ratio, std::fabs(v - evaluate(fit.P, rel)) / std::pow(d, q));
  }
  return fit;
}

namespace {

// C^{k,alpha} norm of u over the sample points, derivatives in the flat chart
// at each point (radial / angular / xi frame).
double interior_ckalpha(const ConeFunction& u, const std::vector<ConePoint>& points, int k, double alpha,
                        double h, const ConeParam& params) {
  if (points.empty()) return 0.0;
  const std::size_t dims = 2 + static_cast<std::size_t>(params.xi_dim());
  const auto orders = orders_up_to(dims, k);
  std::vector<std::vector<double>> table(orders.size());
  const std::vector<double> origin(dims, 0.0);
  for (const auto& p : points) {
    const RnFunction local = [&](std::span<const double> v) {
      return u(flat_offset(p, v[0], v[1], v.subspan(2), params));
    };
    for (std::size_t s = 0; s < orders.size(); ++s) table[s].push_back(central_derivative(local, origin, orders[s], h));
  }
  return ckalpha_from_tables(orders, table, k, alpha,
                             [&](std::size_t i, std::size_t j) { return cone_distance(points[i], points[j], params); });
}

}  // namespace

NormReport uq_norm(const ConeFunction& u, double q, const ConeParam& params, const SamplingPlan& plan) {
  plan.validate();
  require_nonresonant(q, params);
  const int k = static_cast<int>(std::floor(q));
  const double alpha = q - k;
  NormReport report;
  report.kind = "uq";

  // H1
  const auto interior = polar_samples(params, plan, plan.delta, 0.95 * plan.radius, plan.interior_radii);
  report.add("H1", interior_ckalpha(u, interior, k, alpha, plan.fd_step, params));

  // H2
  double h2 = 0.0;
  std::vector<std::pair<std::vector<double>, FPolynomial>> fits;
  for (const auto& xi : xi_grid(params.xi_dim(), plan.xi_values)) {
    if (norm2(xi) >= plan.radius) continue;
    TFit fit = fit_t_polynomial(u, xi, q, params, plan);
    h2 = std::max({h2, fit.coefficient_max, fit.remainder_ratio});
    CenterDetail detail;
    detail.center = {0.0, 0.0};
    detail.center.insert(detail.center.end(), xi.begin(), xi.end());
    detail.polynomial = to_json(fit.P);
    detail.coefficient_max = fit.coefficient_max;
    detail.remainder_ratio = fit.remainder_ratio;
    report.centers.push_back(std::move(detail));
    fits.emplace_back(xi, std::move(fit.P));
  }
  report.add("H2", h2);

  // H3
  const std::size_t dims = 2 + static_cast<std::size_t>(params.xi_dim());
  const double ball = params.c_beta() * plan.ball_fraction;
  const ConePoint ref = unit_reference_point(params);
  std::vector<std::vector<double>> chart;
  {
    std::vector<int> idx(dims, 0);
    while (true) {
      std::vector<double> v(dims);
      double r2 = 0.0;
      for (std::size_t d = 0; d < dims; ++d) {
        v[d] = -ball + 2.0 * ball * idx[d] / (plan.ball_points - 1);
        r2 += v[d] * v[d];
      }
      if (r2 < ball * ball * (1.0 - 1e-9)) chart.push_back(v);
      std::size_t d = 0;
      while (d < dims && ++idx[d] == plan.ball_points) idx[d++] = 0;
      if (d == dims) break;
    }
    if (chart.empty()) chart.emplace_back(dims, 0.0);
  }
  const auto orders = orders_up_to(dims, k);
  double h3 = 0.0;
  for (const auto& [xi, P] : fits) {
    for (int i = 1; i <= plan.h3_levels; ++i) {
      const double rho = plan.delta * std::exp2(-i);
      for (double theta : {0.4, 3.5}) {
        const ConePoint x(rho, theta, xi);
        if (apex_distance(x) >= plan.radius) continue;
        const RnFunction pushed = [&](std::span<const double> v) {
          const ConePoint z = flat_offset(ref, v[0], v[1], v.subspan(2), params);
          const ConePoint y = inverse_scale_map(x, z, params);
          ConePoint rel = y;
          for (std::size_t a = 0; a < rel.xi.size(); ++a) rel.xi[a] -= xi[a];
          return u(y) - evaluate(P, rel);
        };
        std::vector<std::vector<double>> table(orders.size());
        for (std::size_t s = 0; s < orders.size(); ++s) {
          for (const auto& v : chart) table[s].push_back(central_derivative(pushed, v, orders[s], plan.fd_step));
        }
        const double norm = ckalpha_from_tables(orders, table, k, alpha, [&](std::size_t a, std::size_t b) {
          double s = 0.0;
          for (std::size_t d = 0; d < dims; ++d) s += (chart[a][d] - chart[b][d]) * (chart[a][d] - chart[b][d]);
          return std::sqrt(s);
        });
        h3 = std::max(h3, norm / std::pow(rho, q));
      }
    }
  }
  report.add("H3", h3);
  report.finish();
  return report;
}

NormReport donaldson_norm(const ConeFunction& u, double alpha, const ConeParam& params, const SamplingPlan& plan) {
  plan.validate();
  const double beta = params.beta_d();
  if (!(beta > 0.0 && beta < 1.0)) throw DomainRestrictionError("Donaldson norm requires 0 < beta < 1");
  if (!(alpha > 0.0) || !(alpha < std::min(1.0, 1.0 / beta - 1.0))) {
    throw DomainRestrictionError("Donaldson norm requires 0 < alpha < min(1, 1/beta - 1)");
  }
  const int radii = std::max(plan.interior_radii,
                             static_cast<int>(std::ceil(std::log2(0.95 * plan.radius / plan.rho_min) * plan.per_octave)) + 1);
  const auto points = polar_samples(params, plan, plan.rho_min, 0.95 * plan.radius, radii);
  const int n = params.xi_dim();

  std::vector<std::string> names{"D1:u", "D2:d_rho u", "D2:rho^-1 d_theta u"};
  for (int i = 0; i < n; ++i) names.push_back("D2:d_xi" + std::to_string(i + 1) + " u");
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) names.push_back("D3:d_xi" + std::to_string(i + 1) + " d_xi" + std::to_string(j + 1) + " u");
  }
  for (int i = 0; i < n; ++i) names.push_back("D3:d_xi" + std::to_string(i + 1) + " d_rho u");
  for (int i = 0; i < n; ++i) names.push_back("D3:rho^-1 d_xi" + std::to_string(i + 1) + " d_theta u");
  names.push_back("D3:surface laplacian u");
  std::vector<std::vector<double>> table(names.size());

  for (const auto& p : points) {
    const double h = plan.fd_step * p.rho;
    const double dth = h / p.rho;
    auto at = [&](double dr, double dt, int axis = -1, double dx = 0.0) {
      ConePoint y(p.rho + dr, p.theta + dt, p.xi);
      if (axis >= 0) y.xi[static_cast<std::size_t>(axis)] += dx;
      return u(y);
    };
    const double u0 = u(p);
    const double ur = at(h, 0) , ul = at(-h, 0);
    const double ut = at(0, dth), ub = at(0, -dth);
    std::size_t f = 0;
    table[f++].push_back(u0);
    table[f++].push_back((ur - ul) / (2.0 * h));
    table[f++].push_back((ut - ub) / (2.0 * dth * p.rho));
    for (int i = 0; i < n; ++i) table[f++].push_back((at(0, 0, i, h) - at(0, 0, i, -h)) / (2.0 * h));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double v = 0.0;
        if (i == j) {
          v = (at(0, 0, i, h) - 2.0 * u0 + at(0, 0, i, -h)) / (h * h);
        } else {
          auto two = [&](double a, double b) {
            ConePoint y = p;
            y.xi[static_cast<std::size_t>(i)] += a;
            y.xi[static_cast<std::size_t>(j)] += b;
            return u(y);
          };
          v = (two(h, h) - two(h, -h) - two(-h, h) + two(-h, -h)) / (4.0 * h * h);
        }
        table[f++].push_back(v);
      }
    }
    for (int i = 0; i < n; ++i) {
      const double v = (at(h, 0, i, h) - at(h, 0, i, -h) - at(-h, 0, i, h) + at(-h, 0, i, -h)) / (4.0 * h * h);
      table[f++].push_back(v);
    }
    for (int i = 0; i < n; ++i) {
      const double v = (at(0, dth, i, h) - at(0, dth, i, -h) - at(0, -dth, i, h) + at(0, -dth, i, -h)) /
                       (4.0 * h * dth * p.rho);
      table[f++].push_back(v);
    }
    const double lap = (ur - 2.0 * u0 + ul) / (h * h) + (ur - ul) / (2.0 * h * p.rho) +
                       (ut - 2.0 * u0 + ub) / (dth * dth * beta * beta * p.rho * p.rho);
    table[f++].push_back(lap);
  }

  NormReport report;
  report.kind = "donaldson";
  report.combine = "sum";
  const auto metric = [&](std::size_t i, std::size_t j) { return cone_distance(points[i], points[j], params); };
  for (std::size_t f = 0; f < names.size(); ++f) {
    double sup = 0.0;
    for (double v : table[f]) sup = std::max(sup, std::fabs(v));
    report.add(names[f], sup + all_pairs_holder(table[f], alpha, metric));
  }
  report.finish();
  return report;
}

double holder_norm(const ConeFunction& u, double alpha, const ConeParam& params, const SamplingPlan& plan) {
  plan.validate();
  const int radii = std::max(plan.interior_radii,
                             static_cast<int>(std::ceil(std::log2(0.95 * plan.radius / plan.rho_min) * plan.per_octave)) + 1);
  const auto points = polar_samples(params, plan, plan.rho_min, 0.95 * plan.radius, radii, true);
  double sup = 0.0;
  for (const auto& p : points) sup = std::max(sup, std::fabs(u(p)));
  return sup + holder_seminorm(u, points, alpha, params);
}

ComparisonTable compare_spaces(const ConeFunction& u, double alpha, const ConeParam& params, const SamplingPlan& plan,
                               double ceiling) {
  SamplingPlan small = plan;
  small.radius = 1.0;
  SamplingPlan big = plan;
  big.radius = 2.0;
  const double c_small = holder_norm(u, alpha, params, small);
  const double c_big = holder_norm(u, alpha, params, big);
  const double ua_small = uq_norm(u, alpha, params, small).total;
  const double ua_big = uq_norm(u, alpha, params, big).total;
  const double d_small = donaldson_norm(u, alpha, params, small).total;
  const double d_big = donaldson_norm(u, alpha, params, big).total;
  const double u2_small = uq_norm(u, 2.0 + alpha, params, small).total;
  const double u2_big = uq_norm(u, 2.0 + alpha, params, big).total;

  ComparisonTable table;
  auto row = [&](std::string name, double num, double den) {
    ComparisonRow r{std::move(name), num, den, 0.0, false};
    if (den > 0.0) {
      r.ratio = num / den;
    } else if (num > 0.0) {
      r.ratio = std::numeric_limits<double>::infinity();
    }
    r.flagged = !(r.ratio <= ceiling);
    table.max_ratio = std::max(table.max_ratio, r.ratio);
    table.any_flagged = table.any_flagged || r.flagged;
    table.rows.push_back(std::move(r));
  };
  row("U^alpha(B1) / C^alpha(B2)", ua_small, c_big);
  row("C^alpha(B1) / U^alpha(B2)", c_small, ua_big);
  row("U^{2+alpha}(B1) / C^{2,alpha}_beta(B2)", u2_small, d_big);
  row("C^{2,alpha}_beta(B1) / U^{2+alpha}(B2)", d_small, u2_big);
  return table;
}

}  // namespace conic
