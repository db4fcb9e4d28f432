// Exact checks: Poisson right-inverse, multi-index combinatorics, harmonic truncation.
#include <chrono>
#include <random>
#include <set>

#include "conic/multiindex.hpp"
#include "conic/tpoly.hpp"
#include "verify.hpp"

namespace conic::verify {

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  Rational r(p, den(rng));
  r.canonicalize();
  return r;
}

Rational factorial(const MultiIndex& e) {
  Rational f(1);
  for (int v : e.entries()) {
    for (int k = 2; k <= v; ++k) f *= k;
  }
  return f;
}

MultiIndex random_index(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::vector<int> v(n);
  for (auto& x : v) x = entry(rng);
  return MultiIndex(v);
}

}  // namespace

CheckResult check_poisson_identity(const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(options.seed);
  const std::vector<Rational> betas = {Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(2)};
  std::uniform_int_distribution<int> xi_dim(0, 2);
  int identity_failures = 0;
  int bound_failures = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const ConeParam params(betas[static_cast<std::size_t>(trial) % betas.size()], xi_dim(rng));
    const FPolynomial f = random_t_polynomial(params, rng, Rational(6), 4, 6);
    const PoissonLift lift = solve_poisson_detailed(f);
    if (!(laplacian(lift.u) == f)) ++identity_failures;
    if (f.is_zero()) continue;
    const Rational ratio = lift.u.max_abs_coefficient() / f.max_abs_coefficient();
    if (ratio > poisson_coefficient_bound(f)) ++bound_failures;
    worst_ratio = std::max(worst_ratio, to_double(ratio / poisson_coefficient_bound(f)));
  }
  const double seconds = elapsed_since(start);
  CheckResult r;
  r.passed = identity_failures == 0 && bound_failures == 0 && seconds < 5.0;
  r.details["polynomials"] = 200;
  r.details["identity_failures"] = identity_failures;
  r.details["coefficient_bound_failures"] = bound_failures;
  r.details["max_ratio_over_bound"] = worst_ratio;
  r.details["seconds"] = seconds;
  r.summary = "laplacian(solve_poisson(f)) == f on 200 T-polynomials: " + std::to_string(200 - identity_failures) +
              "/200, coefficient bound held: " + std::to_string(200 - bound_failures) + "/200, " +
              std::to_string(seconds) + " s (limit 5 s)";
  return r;
}

CheckResult check_combinatorics(const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  // Q^sigma_eps = 0 (and its shifted form) whenever sigma_i < eps_i for some i.
  long vanishing_cases = 0;
  long vanishing_failures = 0;
  long diagonal_failures = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto indices = all_multi_indices(n, 6);
    for (const auto& eps : indices) {
      for (const auto& sigma : indices) {
        bool below = false;
        for (std::size_t i = 0; i < n; ++i) below = below || sigma[i] < eps[i];
        if (below) {
          ++vanishing_cases;
          if (q_sum(sigma, eps) != 0 || q_sum_shifted(sigma, eps) != 0) ++vanishing_failures;
        } else if (sigma == eps) {
          // Only the top term survives: (-1)^{|eps|+1} eps!.
          Rational expect = factorial(eps);
          if (eps.total() % 2 == 0) expect = -expect;
          if (q_sum(sigma, eps) != expect) ++diagonal_failures;
        }
      }
    }
  }

  // Recursive vs closed-form P_{eps,h} on random rational polynomials.
  std::mt19937_64 rng(options.seed + 2);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> term_count(1, 5);
  int agreement_failures = 0;
  int annihilation_failures = 0;
  int monomial_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(dim(rng));
    DensePolynomial p(n);
    const auto exponents = all_multi_indices(n, 6);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) p.add_term(exponents[rng() % exponents.size()], random_rational(rng, true));
    const MultiIndex eps = random_index(rng, n, 2);
    std::vector<Rational> h(n);
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = random_rational(rng, true);
      y[i] = random_rational(rng, false);
    }
    const FieldFunction<Rational> f = [&p](std::span<const Rational> x) { return p.evaluate(x); };
    const Rational closed = diff_quotient<Rational>(eps, h, f, y);
    const Rational recursive = diff_quotient_recursive<Rational>(eps, h, f, y);
    const Rational symbolic = diff_quotient_polynomial(p, eps, h).evaluate(std::span<const Rational>(y));
    if (closed != recursive || closed != symbolic) ++agreement_failures;

    bool all_below = true;
    for (const auto& [sigma, c] : p.terms()) {
      bool below = false;
      for (std::size_t i = 0; i < n; ++i) below = below || sigma[i] < eps[i];
      all_below = all_below && below;
    }
    if (all_below && !annihilation_check(p, eps, h)) ++annihilation_failures;

    DensePolynomial mono(n);
    mono.add_term(eps, Rational(1));
    const FieldFunction<Rational> g = [&mono](std::span<const Rational> x) { return mono.evaluate(x); };
    if (diff_quotient<Rational>(eps, h, g, y) != factorial(eps)) ++monomial_failures;
  }
  const double seconds = elapsed_since(start);
  CheckResult r;
  r.passed = vanishing_failures == 0 && diagonal_failures == 0 && agreement_failures == 0 &&
             annihilation_failures == 0 && monomial_failures == 0 && seconds < 5.0;
  r.details["vanishing_cases"] = vanishing_cases;
  r.details["vanishing_failures"] = vanishing_failures;
  r.details["diagonal_failures"] = diagonal_failures;
  r.details["random_polynomials"] = 200;
  r.details["recursive_closed_symbolic_disagreements"] = agreement_failures;
  r.details["annihilation_failures"] = annihilation_failures;
  r.details["monomial_factorial_failures"] = monomial_failures;
  r.details["seconds"] = seconds;
  r.summary = "Q^sigma_eps = 0 on " + std::to_string(vanishing_cases) + " cases (" +
              std::to_string(vanishing_failures) + " failures); recursive/closed P_{eps,h} disagreements " +
              std::to_string(agreement_failures) + "/200; " + std::to_string(seconds) + " s (limit 5 s)";
  return r;
}

CheckResult check_harmonic_truncation(const Options& options) {
  std::mt19937_64 rng(options.seed + 3);
  const std::vector<Rational> betas = {Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1), Rational(2)};
  std::uniform_int_distribution<int> xi_dim(0, 2);
  std::uniform_int_distribution<int> kdist(0, 4);
  std::uniform_int_distribution<int> trig(0, 1);
  int non_harmonic = 0;
  int not_xbeta = 0;
  int truncation_failures = 0;
  long truncations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ConeParam params(betas[static_cast<std::size_t>(trial) % betas.size()], xi_dim(rng));
    const int n = params.xi_dim();
    FPolynomial h(params);
    if (trial % 2 == 0) {
      // Harmonic part of a random X_beta seed: s - solve_poisson(laplacian(s)).
      const FPolynomial seed = random_xbeta_polynomial(params, rng, Rational(5), 3, 6);
      h = seed - solve_poisson(laplacian(seed));
    } else {
      // rho^{k/beta} trig(k theta) times a harmonic polynomial in xi.
      std::vector<std::pair<Rational, std::vector<int>>> xi_harmonic;
      xi_harmonic.push_back({Rational(1), std::vector<int>(static_cast<std::size_t>(n), 0)});
      if (n >= 1) xi_harmonic.push_back({Rational(1), {1, 0}});
      if (n == 2) xi_harmonic.push_back({Rational(1), {1, 1}});
      for (int t = 0; t < 4; ++t) {
        const int k = kdist(rng);
        const Trig tr = (k > 0 && trig(rng) == 1) ? Trig::Sin : Trig::Cos;
        const Rational c = random_rational(rng, true);
        auto [xc, xe] = xi_harmonic[rng() % xi_harmonic.size()];
        xe.resize(static_cast<std::size_t>(n));
        h += FPolynomial::t_monomial(params, c * xc, 0, k, k, tr, MultiIndex(xe));
        if (n == 2 && t == 0) {
          // xi1^2 - xi2^2
          h += FPolynomial::t_monomial(params, c, 0, k, k, tr, MultiIndex({2, 0}));
          h += FPolynomial::t_monomial(params, -c, 0, k, k, tr, MultiIndex({0, 2}));
        }
      }
    }
    if (!laplacian(h).is_zero()) ++non_harmonic;
    if (!is_xbeta_polynomial(h)) ++not_xbeta;
    std::set<Rational> degrees;
    for (const auto& [key, c] : h.terms()) degrees.insert(key.degree());
    degrees.insert(h.is_zero() ? Rational(1) : degree(h) + 1);
    for (const auto& d : degrees) {
      ++truncations;
      if (!laplacian(truncate_below(h, d)).is_zero()) ++truncation_failures;
    }
  }
  CheckResult r;
  r.passed = non_harmonic == 0 && not_xbeta == 0 && truncation_failures == 0;
  r.details["polynomials"] = 100;
  r.details["non_harmonic_inputs"] = non_harmonic;
  r.details["non_xbeta_inputs"] = not_xbeta;
  r.details["truncations"] = truncations;
  r.details["truncation_failures"] = truncation_failures;
  r.summary = "every degree truncation of 100 harmonic X_beta-polynomials harmonic: " +
              std::to_string(truncations - truncation_failures) + "/" + std::to_string(truncations);
  return r;
}

}  // namespace conic::verify
