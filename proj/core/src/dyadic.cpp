#include "conic/dyadic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "conic/errors.hpp"
#include "conic/expansion.hpp"

namespace conic {

RadialGrid DyadicConfig::grid() const {
  return RadialGrid(radius * std::ldexp(1.0, -levels - 2), 2.0 * radius, points_per_octave);
}

void DyadicConfig::validate() const {
  params.require_planar();
  if (!(q > 0.0) || !std::isfinite(q)) throw ParameterError("dyadic order q must be positive");
  if (levels < 1) throw ParameterError("dyadic construction needs at least one level");
  if (max_mode < 0) throw ParameterError("max mode must be nonnegative");
  if (points_per_octave < 4) throw ParameterError("need at least 4 points per octave");
  if (!(radius > 0.0)) throw ParameterError("radius must be positive");
  if (!(probe_step > 0.0) || probe_step > 0.25) throw ParameterError("probe step must be in (0, 1/4]");
  const DegreeSet ds(params.beta());
  if (degree_set_near(q, ds, 1e-10)) throw ResonantOrderError("q lies in the degree set");
  if (degree_set_near(q + 2.0, ds, 1e-10)) throw ResonantOrderError("q + 2 lies in the degree set");
}

ConeFunction restrict_to_annulus(ConeFunction f, int level, double radius) {
  const double outer = radius * std::ldexp(1.0, -level);
  const double inner = outer / 2.0;
  return [f = std::move(f), inner, outer](const ConePoint& y) {
    const double d = apex_distance(y);
    return (d > inner && d <= outer) ? f(y) : 0.0;
  };
}

namespace {

std::size_t node_index(const RadialGrid& grid, double rho) {
  const double x = std::log(rho / grid.rho_min()) / std::log(grid.ratio());
  const long i = std::lround(x);
  if (i < 0 || i >= static_cast<long>(grid.size()) ||
      std::fabs(grid[static_cast<std::size_t>(i)] - rho) > 1e-9 * rho) {
    throw GridError("annulus edge is not a grid node");
  }
  return static_cast<std::size_t>(i);
}

// Integral over [t_j, t_{j+1}] of the cubic through four consecutive samples,
// as weights over local indices start..start+3 (uniform spacing, times h/24).
struct IntervalRule {
  std::size_t start;
  std::array<double, 4> w;
};

IntervalRule interval_rule(std::size_t j, std::size_t n) {
  if (j == 0) return {0, {9.0, 19.0, -5.0, 1.0}};
  if (j + 2 == n) return {n - 4, {1.0, -5.0, 19.0, 9.0}};
  return {j - 1, {-1.0, 13.0, 13.0, -1.0}};
}

}  // namespace

ModeField solve_on_annulus(const ModeField& f, double a, double b) {
  const RadialGrid& grid = f.grid();
  const std::size_t ia = node_index(grid, a);
  const std::size_t ib = node_index(grid, b);
  if (ib < ia + 3) throw GridError("annulus needs at least four grid nodes");
  const std::size_t n = ib - ia + 1;
  const double h = std::log(grid.ratio());
  const double beta = f.params().beta_d();
  ModeField w(f.params(), grid, f.max_mode());

  std::vector<double> s2f(n);
  std::vector<double> lower(n);
  std::vector<double> upper(n);
  for (const auto& [key, values] : f.modes()) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = grid[ia + i];
      s2f[i] = s * s * values[ia + i];
      any = any || s2f[i] != 0.0;
    }
    if (!any) continue;
    auto& out = w.mode(key.m, key.trig);

    if (key.m == 0) {
      // w = ln(rho) int_a^rho s f ds + int_rho^b s ln(s) f ds
      lower[0] = 0.0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        const auto rule = interval_rule(j, n);
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) acc += rule.w[k] * s2f[rule.start + k];
        lower[j + 1] = lower[j] + acc * h / 24.0;
      }
      upper[n - 1] = 0.0;
      for (std::size_t j = n - 1; j-- > 0;) {
        const auto rule = interval_rule(j, n);
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          acc += rule.w[k] * s2f[rule.start + k] * std::log(grid[ia + rule.start + k]);
        }
        upper[j] = upper[j + 1] + acc * h / 24.0;
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i < ia) {
          out[i] = upper[0];
        } else if (i > ib) {
          out[i] = std::log(grid[i]) * lower[n - 1];
        } else {
          out[i] = std::log(grid[i]) * lower[i - ia] + upper[i - ia];
        }
      }
      continue;
    }

    // nu = m / beta; J(rho) = int (s/rho)^nu s f ds over s < rho, K over s > rho.
    const double nu = key.m / beta;
    std::array<double, 7> rpow{};  // ratio^{nu d}, d = -3..3
    for (int d = -3; d <= 3; ++d) rpow[static_cast<std::size_t>(d + 3)] = std::exp(nu * h * d);
    auto rp = [&](long d) { return rpow[static_cast<std::size_t>(d + 3)]; };
    lower[0] = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const auto rule = interval_rule(j, n);
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const long d = static_cast<long>(rule.start + k) - static_cast<long>(j + 1);
        acc += rule.w[k] * rp(d) * s2f[rule.start + k];
      }
      lower[j + 1] = rp(-1) * lower[j] + acc * h / 24.0;
    }
    upper[n - 1] = 0.0;
    for (std::size_t j = n - 1; j-- > 0;) {
      const auto rule = interval_rule(j, n);
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const long d = static_cast<long>(j) - static_cast<long>(rule.start + k);
        acc += rule.w[k] * rp(d) * s2f[rule.start + k];
      }
      upper[j] = rp(-1) * upper[j + 1] + acc * h / 24.0;
    }
    const double scale = -1.0 / (2.0 * nu);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i < ia) {
        out[i] = scale * std::pow(grid[i] / a, nu) * upper[0];
      } else if (i > ib) {
        out[i] = scale * std::pow(b / grid[i], nu) * lower[n - 1];
      } else {
        out[i] = scale * (lower[i - ia] + upper[i - ia]);
      }
    }
  }
  return w;
}

ModeField solve_level(const ModeField& f, int level, const DyadicConfig& cfg) {
  if (level < 0) throw ParameterError("level must be nonnegative");
  const double b = cfg.radius * std::ldexp(1.0, -level);
  return solve_on_annulus(f, b / 2.0, b);
}

ModeField solve_level(const ConeFunction& f_level, int level, const DyadicConfig& cfg) {
  cfg.validate();
  if (level < 0 || level >= cfg.levels) throw ParameterError("level outside the configured range");
  const double b = cfg.radius * std::ldexp(1.0, -level);
  const double a = b / 2.0;
  const RadialGrid grid = cfg.grid();
  const std::size_t ia = node_index(grid, a);
  const std::size_t ib = node_index(grid, b);

  // the inner edge is open; sample it from inside the annulus
  const double nudged = a * (1.0 + 1e-12);
  auto closed = [&](const ConePoint& p) {
    if (p.rho <= nudged) return f_level(ConePoint(nudged, p.theta, p.xi));
    return f_level(p);
  };
  const RadialGrid annulus(grid[ia], grid[ib], cfg.points_per_octave);
  const ModeField local = analyze(closed, cfg.params, annulus, cfg.max_mode);
  if (local.grid().size() != ib - ia + 1) throw GridError("annulus grid does not align with the level grid");

  const int n = angular_samples(cfg.max_mode);
  double inside = 0.0;
  for (std::size_t i = 0; i < annulus.size(); i += std::max<std::size_t>(1, annulus.size() / 8)) {
    for (int j = 0; j < n; ++j) inside = std::max(inside, std::fabs(closed(ConePoint(annulus[i], kTwoPi * j / n))));
  }
  for (double r : {a / 2.0, a * 0.999, b * 1.001, 2.0 * b}) {
    for (int j = 0; j < n; ++j) {
      if (std::fabs(f_level(ConePoint(r, kTwoPi * j / n))) > 1e-12 * (1.0 + inside)) {
        throw SupportError("level data is nonzero outside its annulus");
      }
    }
  }

  ModeField full(cfg.params, grid, cfg.max_mode);
  for (const auto& [key, values] : local.modes()) {
    auto& out = full.mode(key.m, key.trig);
    std::copy(values.begin(), values.end(), out.begin() + static_cast<std::ptrdiff_t>(ia));
  }
  return solve_on_annulus(full, a, b);
}

namespace {

void compute_probes(DyadicSolution& sol, const ConeFunction& f) {
  const auto& cfg = sol.cfg;
  const ConeFunction u = as_function(sol.u);
  sol.probes.clear();
  sol.max_residual = 0.0;
  for (int l = 1; l + 2 <= cfg.levels; ++l) {
    const double rho = 0.75 * cfg.radius * std::ldexp(1.0, -l);
    for (double theta : {0.3, 2.1, 4.4}) {
      const ConePoint p(rho, theta);
      const double r = laplacian_residual(u, f, p, cfg.probe_step * rho, cfg.params);
      sol.probes.push_back({rho, theta, r});
      sol.max_residual = std::max(sol.max_residual, std::fabs(r));
    }
  }
}

}  // namespace

DyadicSolution construct(const ModeField& f, const DyadicConfig& cfg) {
  cfg.validate();
  const RadialGrid grid = cfg.grid();
  if (f.grid().nodes() != grid.nodes() || f.max_mode() != cfg.max_mode || !(f.params() == cfg.params)) {
    throw GridError("data field does not live on the configured grid");
  }
  const double lo = cfg.radius * std::ldexp(1.0, 1 - cfg.levels);
  const double hi = cfg.radius;
  const double qs = cfg.q + 2.0;

  DyadicSolution sol{cfg, f, {}, ModeField(cfg.params, grid, cfg.max_mode), 0.0, 0.0, 0.0, {}, 0.0, 0.0};
  sol.f_seminorm = power_weighted_sup(f, lo, hi, cfg.q);
  if (!std::isfinite(sol.f_seminorm)) throw InputClassError("[f]_{O_q} estimate is not finite");

  for (int l = 0; l < cfg.levels; ++l) {
    ModeField w = solve_level(f, l, cfg);
    FPolynomial P = expansion_of_dyadic_piece(w, l, qs, cfg.radius);
    ModeField u = w;
    u -= to_mode_field(P, grid, cfg.max_mode);
    sol.pieces.push_back({l, std::move(w), std::move(P), std::move(u)});
  }
  for (const auto& piece : sol.pieces) sol.u += piece.u;

  sol.u_seminorm = power_weighted_sup(sol.u, lo, hi, qs);
  sol.seminorm_ratio = sol.f_seminorm > 0.0 ? sol.u_seminorm / sol.f_seminorm : 0.0;
  const double last = power_weighted_sup(sol.pieces.back().u, grid.rho_min(), cfg.radius, 0.0);
  const double decay = std::exp2(-qs);
  sol.truncation_error = last * decay / (1.0 - decay);
  compute_probes(sol, as_function(f));
  return sol;
}

DyadicSolution construct(const ConeFunction& f, const DyadicConfig& cfg) {
  cfg.validate();
  DyadicSolution sol = construct(analyze(f, cfg.params, cfg.grid(), cfg.max_mode), cfg);
  compute_probes(sol, f);
  return sol;
}

namespace {

double next_degree_above_d(double t, double beta) {
  double best = std::numeric_limits<double>::infinity();
  for (long k = 0; k / beta <= t + 1.0; ++k) {
    const double base = k / beta;
    const double j = std::floor(t - base + 1e-12) + 1.0;
    best = std::min(best, std::max(j, 0.0) + base);
  }
  return best;
}

}  // namespace

std::vector<LevelDiagnostics> level_diagnostics(const DyadicSolution& sol) {
  const auto& cfg = sol.cfg;
  const double lambda = sol.f_seminorm;
  const double qs = cfg.q + 2.0;
  const double beta = cfg.params.beta_d();
  const double qs_star = next_degree_above_d(qs, beta);
  const double rmin = sol.u.grid().rho_min();
  std::vector<LevelDiagnostics> out;
  for (const auto& piece : sol.pieces) {
    LevelDiagnostics d;
    d.level = piece.level;
    if (lambda == 0.0) {
      out.push_back(d);
      continue;
    }
    const double scale = cfg.radius * std::ldexp(1.0, -piece.level);
    // below ~1e-12 sup|w_l| the inner field is cancellation noise, which d^{-(q+2)*} would amplify
    const double noise = 1e-12 * piece.w.max_abs();
    d.inner = power_weighted_sup(piece.u, rmin, scale / 2.0, qs_star, noise) / (lambda * std::pow(scale, qs - qs_star));
    d.annulus = power_weighted_sup(piece.u, scale / 2.0, scale, qs) / lambda;
    if (piece.level > 0) {
      // In the plane the k = 0 term of the outer bound carries a log factor.
      d.outer = weighted_sup(piece.u, scale, cfg.radius, [&](double r) {
        double acc = std::pow(scale, qs) * (1.0 + std::log(r / scale));
        for (int k = 1; k <= cfg.max_mode && k / beta < qs; ++k) acc += std::pow(scale, qs - k / beta) * std::pow(r, k / beta);
        return lambda * acc;
      });
    }
    for (const auto& [key, c] : piece.P.terms()) {
      const double ratio = std::fabs(c.get_d()) / (lambda * std::pow(scale, qs - key.gamma.get_d()));
      auto it = std::find_if(d.degree_ratios.begin(), d.degree_ratios.end(),
                             [&](const DegreeRatio& r) { return r.degree == key.gamma; });
      if (it == d.degree_ratios.end()) {
        d.degree_ratios.push_back({key.gamma, ratio});
      } else {
        it->ratio = std::max(it->ratio, ratio);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string diagnostics_csv(const std::vector<LevelDiagnostics>& diag) {
  std::string out = "level,inner,annulus,outer,degree,coeff_ratio\n";
  char buf[256];
  for (const auto& d : diag) {
    if (d.degree_ratios.empty()) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,,\n", d.level, d.inner, d.annulus, d.outer);
      out += buf;
    }
    for (const auto& r : d.degree_ratios) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%s,%.17g\n", d.level, d.inner, d.annulus, d.outer,
                    to_string(r.degree).c_str(), r.ratio);
      out += buf;
    }
  }
  return out;
}

double DiagnosticSpread::worst() const { return std::max({inner, annulus, outer}); }

DiagnosticSpread diagnostic_spread(const std::vector<LevelDiagnostics>& diag, int lo, int hi, double floor) {
  auto spread = [&](auto field) {
    double mx = 0.0;
    double mn = std::numeric_limits<double>::infinity();
    int count = 0;
    for (const auto& d : diag) {
      if (d.level < lo || d.level > hi) continue;
      const double v = field(d);
      if (!(v > floor)) continue;
      mx = std::max(mx, v);
      mn = std::min(mn, v);
      ++count;
    }
    return count >= 2 ? mx / mn : 1.0;
  };
  DiagnosticSpread s;
  s.inner = spread([](const LevelDiagnostics& d) { return d.inner; });
  s.annulus = spread([](const LevelDiagnostics& d) { return d.annulus; });
  s.outer = spread([](const LevelDiagnostics& d) { return d.outer; });
  return s;
}

}  // namespace conic
