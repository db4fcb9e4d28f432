#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "conic/geometry.hpp"
#include "conic/multiindex.hpp"
#include "conic/rational.hpp"

namespace conic {

enum class Trig { Cos, Sin };

const char* to_string(Trig t) noexcept;
Trig parse_trig(std::string_view s);

/// rho^gamma * trig(m theta) * xi^sigma, without the coefficient. gamma is an
/// arbitrary rational so the image of the Laplacian stays representable.
struct MonomialKey {
  Rational gamma;
  int m = 0;
  Trig trig = Trig::Cos;
  MultiIndex sigma;

  Rational degree() const { return gamma + sigma.total(); }

  friend bool operator==(const MonomialKey& a, const MonomialKey& b) {
    return a.gamma == b.gamma && a.m == b.m && a.trig == b.trig && a.sigma == b.sigma;
  }
  friend bool operator<(const MonomialKey& a, const MonomialKey& b);
};

/// (j, k) with gamma = 2j + k/beta, k >= m and k - m even; the smallest such k.
std::optional<std::pair<long, long>> t_decomposition(const MonomialKey& key, const Rational& beta);

bool is_t_monomial(const MonomialKey& key, const Rational& beta);
/// T-monomial with m = k (the harmonic-expansion class).
bool is_xbeta_monomial(const MonomialKey& key, const Rational& beta);

/// Finite sum of generalized monomials with exact coefficients, in canonical
/// form (sorted keys, no zero coefficients).
class FPolynomial {
 public:
  explicit FPolynomial(ConeParam params);

  static FPolynomial constant(const ConeParam& params, const Rational& c);
  static FPolynomial monomial(const ConeParam& params, const Rational& coeff, const Rational& gamma, int m,
                              Trig trig, MultiIndex sigma);
  /// rho^{2j + k/beta} trig(m theta) xi^sigma.
  static FPolynomial t_monomial(const ConeParam& params, const Rational& coeff, long j, long k, int m,
                                Trig trig, MultiIndex sigma);

  const ConeParam& params() const noexcept { return params_; }
  const std::map<MonomialKey, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds coeff * key; sin 0theta terms are dropped.
  void add_term(const MonomialKey& key, const Rational& coeff);

  FPolynomial& operator+=(const FPolynomial& other);
  FPolynomial& operator-=(const FPolynomial& other);
  FPolynomial operator+(const FPolynomial& other) const;
  FPolynomial operator-(const FPolynomial& other) const;
  FPolynomial scaled(const Rational& c) const;

  Rational max_abs_coefficient() const;

  friend bool operator==(const FPolynomial& a, const FPolynomial& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const FPolynomial& other) const;

  ConeParam params_;
  std::map<MonomialKey, Rational> terms_;
};

bool is_t_polynomial(const FPolynomial& p);
bool is_xbeta_polynomial(const FPolynomial& p);

/// Per-term T-validity flags, in canonical key order.
std::vector<std::pair<MonomialKey, bool>> validity_flags(const FPolynomial& p);

/// Highest term degree. Throws UndefinedDegreeError for the zero polynomial.
Rational degree(const FPolynomial& p);

/// Product via product-to-sum identities.
FPolynomial multiply(const FPolynomial& p, const FPolynomial& q);

/// Cone Laplacian d_rho^2 + rho^{-1} d_rho + (beta rho)^{-2} d_theta^2 + Laplacian in xi.
FPolynomial laplacian(const FPolynomial& p);

struct PoissonLift {
  FPolynomial u;
  int depth = 0;                 ///< number of lift rounds
  Rational coefficient_bound;    ///< C with max|coeff u| <= C max|coeff f|
};

/// Right-inverse of the Laplacian on T-polynomials with zero harmonic part.
/// Throws ValidityError when f is not a T-polynomial.
FPolynomial solve_poisson(const FPolynomial& f);
PoissonLift solve_poisson_detailed(const FPolynomial& f);

/// A priori bound C(q, beta) on max|coeff u| / max|coeff f| for solve_poisson.
Rational poisson_coefficient_bound(const FPolynomial& f);

/// The sub-sum of terms with degree strictly below q.
FPolynomial truncate_below(const FPolynomial& p, const Rational& q);

double evaluate(const FPolynomial& p, const ConePoint& x);

/// d_rho^a d_theta^b d_xi^tau p at x.
double evaluate_derivative(const FPolynomial& p, const ConePoint& x, int a, int b, const MultiIndex& tau);

ConeFunction as_function(const FPolynomial& p);

/// Sampled C^l norm (max over a + b + |tau| <= l of sup |d_rho^a d_theta^b d_xi^tau f|)
/// of f on the metric ball B(center, radius), using exact symbolic derivatives.
double sampled_cl_norm(const FPolynomial& f, const ConePoint& center, double radius, int l,
                       int samples_per_axis = 9);

/// Sampled C^l norm of S_x(f) on the reference ball of radius c_beta around (1, 0, 0).
/// Requires 0 < rho(x) < 1/2, xi(x) = 0 and l <= 4.
double scaled_monomial_norm(const FPolynomial& f, const ConePoint& x, int l, int samples_per_axis = 9);

/// Every key of a T-monomial with degree < q (or <= q when inclusive), canonical order.
std::vector<MonomialKey> t_monomial_basis(const ConeParam& params, const Rational& q, bool inclusive = false);

/// Random T-polynomial with total degree <= max_degree and |sigma| <= max_sigma.
FPolynomial random_t_polynomial(const ConeParam& params, std::mt19937_64& rng, const Rational& max_degree,
                                int max_sigma, int max_terms = 6);

/// Random X_beta-polynomial (m = k terms only) with the same bounds.
FPolynomial random_xbeta_polynomial(const ConeParam& params, std::mt19937_64& rng, const Rational& max_degree,
                                    int max_sigma, int max_terms = 6);

/// JSON text {"beta":"p/q","xi_dim":n,"terms":[{"coeff","j","k","m","trig","sigma"}...]}.
/// Terms outside the T-class are written with "gamma" in place of j and k.
std::string to_json(const FPolynomial& p);
FPolynomial from_json(const std::string& text);

std::string to_display_string(const FPolynomial& p);

}  // namespace conic
