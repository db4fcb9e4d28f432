#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "conic/errors.hpp"
#include "conic/rational.hpp"

namespace conic {

/// Nonnegative multi-index; |e| is the sum of entries, <= is componentwise.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);
  static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int total() const noexcept;

  bool le(const MultiIndex& other) const;  // componentwise
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex with(std::size_t i, int value) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Calls fn(gamma) for every 0 <= gamma <= eps in lexicographic order.
void for_each_below(const MultiIndex& eps, const std::function<void(const MultiIndex&)>& fn);

/// Every multi-index of length n with |sigma| <= max_total.
std::vector<MultiIndex> all_multi_indices(std::size_t n, int max_total);

/// Product of binomials C(eps_i, gamma_i).
Rational multi_binomial(const MultiIndex& eps, const MultiIndex& gamma);

/// gamma^sigma with 0^0 = 1; `shift` subtracts a constant from each gamma_i first.
Rational multi_power(const MultiIndex& gamma, const MultiIndex& sigma, int shift = 0);

/// Q^sigma_eps = sum_{0<=gamma<=eps} (-1)^{|gamma|+1} C^gamma_eps gamma^sigma.
Rational q_sum(const MultiIndex& sigma, const MultiIndex& eps);
/// The same sum with (gamma - 1)^sigma.
Rational q_sum_shifted(const MultiIndex& sigma, const MultiIndex& eps);

/// True iff |h_i| >= |h| / (2 sqrt(n)) for every component.
bool omega_contains(std::span<const double> h);

/// Dense exact polynomial on R^n: exponent multi-index -> coefficient.
class DensePolynomial {
 public:
  explicit DensePolynomial(std::size_t n = 1) : n_(n) {}

  std::size_t dim() const noexcept { return n_; }
  void add_term(const MultiIndex& exponent, const Rational& coeff);
  const std::map<MultiIndex, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  Rational evaluate(std::span<const Rational> y) const;
  double evaluate(std::span<const double> y) const;

  /// p(y + offset) as a polynomial in y.
  DensePolynomial shifted(std::span<const Rational> offset) const;

  DensePolynomial& operator+=(const DensePolynomial& other);
  DensePolynomial scaled(const Rational& c) const;

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

 private:
  std::size_t n_;
  std::map<MultiIndex, Rational> terms_;
};

namespace detail {

template <class Scalar>
void check_increment(std::span<const Scalar> h) {
  for (const auto& v : h) {
    if (v == Scalar(0)) throw InvalidIncrementError("difference quotient needs h_i != 0 for all i");
  }
}

template <class Scalar>
Scalar signed_binomial_weight(const MultiIndex& eps, const MultiIndex& gamma) {
  const int parity = (eps.total() - gamma.total()) % 2;
  Rational w = multi_binomial(eps, gamma);
  if (parity != 0) w = -w;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return w;
  } else {
    return static_cast<Scalar>(w.get_d());
  }
}

}  // namespace detail

template <class Scalar>
using FieldFunction = std::function<Scalar(std::span<const Scalar>)>;

/// Closed form of P_{eps,h}[f](y):
///   (1/h^eps) sum_{0<=gamma<=eps} (-1)^{|eps|-|gamma|} C^gamma_eps f(y + gamma h).
template <class Scalar>
Scalar diff_quotient(const MultiIndex& eps, std::span<const Scalar> h, const FieldFunction<Scalar>& f,
                     std::span<const Scalar> y) {
  if (h.size() != eps.size() || y.size() != eps.size()) {
    throw DimensionError("diff_quotient: dimension mismatch");
  }
  detail::check_increment(h);
  Scalar acc(0);
  std::vector<Scalar> point(y.begin(), y.end());
  for_each_below(eps, [&](const MultiIndex& gamma) {
    for (std::size_t i = 0; i < point.size(); ++i) point[i] = y[i] + Scalar(gamma[i]) * h[i];
    acc += detail::signed_binomial_weight<Scalar>(eps, gamma) * f(point);
  });
  Scalar denom(1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (int k = 0; k < eps[i]; ++k) denom *= h[i];
  }
  return Scalar(acc / denom);
}

/// P_{eps,h} by its recursive definition, peeling the last nonzero direction.
template <class Scalar>
Scalar diff_quotient_recursive(const MultiIndex& eps, std::span<const Scalar> h,
                               const FieldFunction<Scalar>& f, std::span<const Scalar> y) {
  if (h.size() != eps.size() || y.size() != eps.size()) {
    throw DimensionError("diff_quotient: dimension mismatch");
  }
  detail::check_increment(h);
  std::size_t dir = eps.size();
  for (std::size_t i = eps.size(); i-- > 0;) {
    if (eps[i] > 0) {
      dir = i;
      break;
    }
  }
  if (dir == eps.size()) return f(y);
  const MultiIndex lower = eps.with(dir, eps[dir] - 1);
  std::vector<Scalar> moved(y.begin(), y.end());
  moved[dir] += h[dir];
  const Scalar up = diff_quotient_recursive<Scalar>(lower, h, f, moved);
  const Scalar here = diff_quotient_recursive<Scalar>(lower, h, f, y);
  return Scalar((up - here) / h[dir]);
}

/// P_{eps,h}[p] as an exact polynomial in y.
DensePolynomial diff_quotient_polynomial(const DensePolynomial& p, const MultiIndex& eps,
                                         std::span<const Rational> h);

/// True iff P_{eps,h}[p] vanishes identically (decided symbolically).
bool annihilation_check(const DensePolynomial& p, const MultiIndex& eps, std::span<const Rational> h);

}  // namespace conic
