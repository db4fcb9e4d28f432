#include "conic/builtins.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "conic/errors.hpp"
#include "conic/tpoly.hpp"

namespace conic {

AngularProfile AngularProfile::random(std::uint64_t seed, int max_mode) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  AngularProfile p;
  for (int m = 0; m <= max_mode; ++m) {
    p.a.push_back(coeff(rng));
    p.b.push_back(m == 0 ? 0.0 : coeff(rng));
  }
  return p;
}

double AngularProfile::operator()(double theta) const {
  double v = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    v += a[m] * std::cos(static_cast<double>(m) * theta) + b[m] * std::sin(static_cast<double>(m) * theta);
  }
  return v;
}

std::vector<std::string> split_spec(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.emplace_back(spec.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return parts;
}

namespace {

double number(const std::vector<std::string>& parts, std::size_t i, std::string_view spec) {
  if (i >= parts.size()) throw ParseError("builtin '" + std::string(spec) + "' is missing a parameter");
  try {
    std::size_t used = 0;
    const double v = std::stod(parts[i], &used);
    if (used != parts[i].size()) throw ParseError("bad number '" + parts[i] + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + parts[i] + "' in builtin '" + std::string(spec) + "'");
  }
}

void require_arity(const std::vector<std::string>& parts, std::size_t n, std::string_view spec) {
  if (parts.size() != n) throw ParseError("builtin '" + std::string(spec) + "' takes " + std::to_string(n - 1) + " parameters");
}

double radial_factor(int k, double rho) {
  switch (k) {
    case 0: return 1.0;
    case 1: return 1.0 + rho;
    case 2: return 1.0 / (1.0 + rho * rho);
    case 3: return std::cos(rho);
    default: return 1.0 + 0.5 * rho * rho;
  }
}

}  // namespace

ConeFunction cone_field(std::string_view spec, const ConeParam& params) {
  const auto parts = split_spec(spec);
  const std::string& name = parts.front();
  const double beta = params.beta_d();
  auto xi0 = [](const ConePoint& p) {
    if (p.xi.empty()) throw DimensionError("this builtin needs xi_dim >= 1");
    return p.xi[0];
  };
  if (name == "zero") {
    require_arity(parts, 1, spec);
    return [](const ConePoint&) { return 0.0; };
  }
  if (name == "const") {
    require_arity(parts, 2, spec);
    const double c = number(parts, 1, spec);
    return [c](const ConePoint&) { return c; };
  }
  if (name == "chi") {
    require_arity(parts, 2, spec);
    const double r = number(parts, 1, spec);
    return [r](const ConePoint& p) { return apex_distance(p) <= r ? 1.0 : 0.0; };
  }
  if (name == "power" || name == "powersin") {
    require_arity(parts, 3, spec);
    const double s = number(parts, 1, spec);
    const double m = number(parts, 2, spec);
    const bool is_sin = name == "powersin";
    return [s, m, is_sin](const ConePoint& p) {
      if (apex_distance(p) > 1.0) return 0.0;
      const double t = is_sin ? std::sin(m * p.theta) : std::cos(m * p.theta);
      return p.rho == 0.0 ? (s == 0.0 ? t : 0.0) : std::pow(p.rho, s) * t;
    };
  }
  if (name == "band" || name == "radial-band") {
    require_arity(parts, name == "band" ? 3 : 4, spec);
    const double s = number(parts, 1, spec);
    const auto seed = static_cast<std::uint64_t>(number(parts, 2, spec));
    const int k = name == "band" ? 0 : static_cast<int>(number(parts, 3, spec));
    const AngularProfile prof = AngularProfile::random(seed);
    return [s, prof, k](const ConePoint& p) {
      if (apex_distance(p) > 1.0 || p.rho == 0.0) return 0.0;
      return std::pow(p.rho, s) * radial_factor(k, p.rho) * prof(p.theta);
    };
  }
  if (name == "harmonic" || name == "harmonicsin") {
    require_arity(parts, 2, spec);
    const double k = number(parts, 1, spec);
    const bool is_sin = name == "harmonicsin";
    return [k, beta, is_sin](const ConePoint& p) {
      const double t = is_sin ? std::sin(k * p.theta) : std::cos(k * p.theta);
      return (k == 0.0 ? 1.0 : std::pow(p.rho, k / beta)) * t;
    };
  }
  if (name == "rho") {
    require_arity(parts, 2, spec);
    const double s = number(parts, 1, spec);
    return [s](const ConePoint& p) { return p.rho == 0.0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(p.rho, s); };
  }
  if (name == "monic") {
    require_arity(parts, 2, spec);
    const int i = static_cast<int>(number(parts, 1, spec));
    switch (i) {
      case 0: return [](const ConePoint&) { return 1.0; };
      case 1: return [beta](const ConePoint& p) { return std::pow(p.rho, 1.0 / beta) * std::cos(p.theta); };
      case 2: return [beta](const ConePoint& p) { return std::pow(p.rho, 1.0 / beta) * std::sin(p.theta); };
      case 3: return [](const ConePoint& p) { return p.rho * p.rho; };
      case 4: return [xi0](const ConePoint& p) { return xi0(p); };
      case 5: return [xi0](const ConePoint& p) { return xi0(p) * xi0(p); };
      default: throw ParseError("monic index must be 0..5");
    }
  }
  if (name == "synthetic") {
    require_arity(parts, 2, spec);
    const int i = static_cast<int>(number(parts, 1, spec));
    switch (i) {
      case 0: return [xi0](const ConePoint& p) { return std::exp(xi0(p)) * (1.0 + p.rho * p.rho / 4.0); };
      case 1: return [xi0](const ConePoint& p) { return p.rho * p.rho * std::cos(p.theta) * std::cos(xi0(p)); };
      case 2: return [xi0](const ConePoint& p) { return std::sin(xi0(p)) + p.rho * p.rho; };
      case 3: return [](const ConePoint& p) { return std::pow(p.rho, 4) * std::cos(2.0 * p.theta); };
      case 4: return [xi0](const ConePoint& p) { return 1.0 / (1.0 + xi0(p) * xi0(p)); };
      case 5: return [xi0](const ConePoint& p) { return p.rho * p.rho * std::sin(p.theta) + p.rho * p.rho * xi0(p); };
      default: throw ParseError("synthetic index must be 0..5");
    }
  }
  if (name == "family") {
    require_arity(parts, 3, spec);
    const int i = static_cast<int>(number(parts, 1, spec));
    const double q = number(parts, 2, spec);
    if (i < 0 || i > 9) throw ParseError("family index must be 0..9");
    const AngularProfile prof = AngularProfile::random(static_cast<std::uint64_t>(1000 + i));
    const double c = 0.5 * (i % 3);
    const double lead = q > 1.0 / beta ? 1.0 - 0.2 * i : 0.0;
    return [prof, c, lead, q, beta, i](const ConePoint& p) {
      if (p.rho == 0.0) return c;
      return c + lead * std::pow(p.rho, 1.0 / beta) * std::cos(p.theta) +
             std::pow(p.rho, q) * radial_factor(i % 5, p.rho) * prof(p.theta);
    };
  }
  if (name == "tpoly") {
    if (parts.size() < 2) throw ParseError("tpoly builtin needs a path");
    const std::string path(spec.substr(6));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read polynomial file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    FPolynomial p = from_json(buf.str());
    if (!(p.params() == params)) throw ParameterError("polynomial file has different cone parameters");
    return as_function(p);
  }
  throw ParseError("unknown cone builtin '" + std::string(spec) + "'");
}

std::function<double(double)> boundary_field(std::string_view spec) {
  const auto parts = split_spec(spec);
  const std::string& name = parts.front();
  if (name == "const") {
    require_arity(parts, 2, spec);
    const double c = number(parts, 1, spec);
    return [c](double) { return c; };
  }
  if (name == "cos" || name == "sin") {
    require_arity(parts, 2, spec);
    const double k = number(parts, 1, spec);
    if (name == "cos") return [k](double t) { return std::cos(k * t); };
    return [k](double t) { return std::sin(k * t); };
  }
  if (name == "band") {
    require_arity(parts, 3, spec);
    const auto seed = static_cast<std::uint64_t>(number(parts, 1, spec));
    const AngularProfile prof = AngularProfile::random(seed, static_cast<int>(number(parts, 2, spec)));
    return [prof](double t) { return prof(t); };
  }
  throw ParseError("unknown boundary builtin '" + std::string(spec) + "'");
}

RnFunction rn_field(std::string_view spec) {
  const auto parts = split_spec(spec);
  const std::string& name = parts.front();
  if (name == "abs-power") {
    require_arity(parts, 2, spec);
    const double p = number(parts, 1, spec);
    return [p](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += v * v;
      return std::pow(std::sqrt(s), p);
    };
  }
  if (name == "xsin") {
    require_arity(parts, 1, spec);
    return [](std::span<const double> x) { return x[0] == 0.0 ? 0.0 : x[0] * x[0] * std::sin(1.0 / x[0]); };
  }
  if (name == "smooth") {
    require_arity(parts, 2, spec);
    const int i = static_cast<int>(number(parts, 1, spec));
    using F = RnFunction;
    static const std::vector<F> family = {
        [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[1]); },
        [](std::span<const double> x) { return std::exp(0.5 * x[0] - 0.3 * x[1]); },
        [](std::span<const double> x) { return 1.0 / (1.0 + x[0] * x[0] + x[1] * x[1]); },
        [](std::span<const double> x) { return x[0] * x[0] - x[1] * x[1] + x[0]; },
        [](std::span<const double> x) { return std::cos(2.0 * x[0] + x[1]); },
        [](std::span<const double> x) { return std::log(2.0 + x[0] + 0.5 * x[1]); },
        [](std::span<const double> x) { return x[0] * x[1] * x[1] + 0.5 * x[1]; },
        [](std::span<const double> x) { return std::atan(x[0] - x[1]); },
        [](std::span<const double> x) { return std::sqrt(1.0 + x[0] * x[0] + 2.0 * x[1] * x[1]); },
        [](std::span<const double> x) { return std::exp(-x[0] * x[0]) * std::sin(x[1] + 0.3); },
    };
    if (i < 0 || i >= static_cast<int>(family.size())) throw ParseError("smooth index must be 0..9");
    return family[static_cast<std::size_t>(i)];
  }
  throw ParseError("unknown R^n builtin '" + std::string(spec) + "'");
}

}  // namespace conic
