#include "conic/multiindex.hpp"

#include <cmath>
#include <numeric>

namespace conic {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw ParameterError("multi-index entries must be nonnegative");
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

int MultiIndex::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiIndex::le(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  std::vector<int> out(entries_);
  for (std::size_t i = 0; i < size(); ++i) out[i] += other.entries_[i];
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::with(std::size_t i, int value) const {
  std::vector<int> out(entries_);
  out.at(i) = value;
  return MultiIndex(std::move(out));
}

void for_each_below(const MultiIndex& eps, const std::function<void(const MultiIndex&)>& fn) {
  const std::size_t n = eps.size();
  std::vector<int> cur(n, 0);
  while (true) {
    fn(MultiIndex(cur));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < eps[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<MultiIndex> all_multi_indices(std::size_t n, int max_total) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      cur[i] = v;
      rec(i + 1, budget - v);
    }
    cur[i] = 0;
  };
  rec(0, max_total);
  return out;
}

Rational multi_binomial(const MultiIndex& eps, const MultiIndex& gamma) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(eps[i]), static_cast<unsigned long>(gamma[i]));
    out *= c;
  }
  return Rational(out);
}

Rational multi_power(const MultiIndex& gamma, const MultiIndex& sigma, int shift) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (sigma[i] == 0) continue;  // 0^0 = 1
    mpz_class base = gamma[i] - shift;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(sigma[i]));
    out *= p;
  }
  return Rational(out);
}

namespace {

Rational q_sum_impl(const MultiIndex& sigma, const MultiIndex& eps, int shift) {
  if (sigma.size() != eps.size()) throw DimensionError("q_sum: multi-index length mismatch");
  Rational acc = 0;
  for_each_below(eps, [&](const MultiIndex& gamma) {
    Rational term = multi_binomial(eps, gamma) * multi_power(gamma, sigma, shift);
    if ((gamma.total() + 1) % 2 != 0) term = -term;
    acc += term;
  });
  return acc;
}

}  // namespace

Rational q_sum(const MultiIndex& sigma, const MultiIndex& eps) { return q_sum_impl(sigma, eps, 0); }

Rational q_sum_shifted(const MultiIndex& sigma, const MultiIndex& eps) {
  return q_sum_impl(sigma, eps, 1);
}

bool omega_contains(std::span<const double> h) {
  double norm2 = 0.0;
  for (double v : h) norm2 += v * v;
  if (h.empty() || norm2 == 0.0) throw InvalidIncrementError("omega_contains: zero increment");
  const double threshold = std::sqrt(norm2) / (2.0 * std::sqrt(static_cast<double>(h.size())));
  for (double v : h) {
    if (std::fabs(v) < threshold) return false;
  }
  return true;
}

void DensePolynomial::add_term(const MultiIndex& exponent, const Rational& coeff) {
  if (exponent.size() != n_) throw DimensionError("polynomial exponent length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int DensePolynomial::degree() const {
  if (terms_.empty()) throw UndefinedDegreeError("degree of the zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

Rational DensePolynomial::evaluate(std::span<const Rational> y) const {
  if (y.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= y[i];
    }
    acc += t;
  }
  return acc;
}

double DensePolynomial::evaluate(std::span<const double> y) const {
  if (y.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < n_; ++i) t *= std::pow(y[i], e[i]);
    acc += t;
  }
  return acc;
}

DensePolynomial DensePolynomial::shifted(std::span<const Rational> offset) const {
  if (offset.size() != n_) throw DimensionError("shift has wrong dimension");
  DensePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    // prod_i (y_i + a_i)^{e_i} = sum_{g <= e} C(e, g) a^{e - g} y^g
    for_each_below(e, [&](const MultiIndex& g) {
      Rational coeff = c * multi_binomial(e, g);
      for (std::size_t i = 0; i < n_; ++i) {
        for (int k = 0; k < e[i] - g[i]; ++k) coeff *= offset[i];
      }
      out.add_term(g, coeff);
    });
  }
  return out;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& other) {
  if (other.n_ != n_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

DensePolynomial DensePolynomial::scaled(const Rational& c) const {
  DensePolynomial out(n_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

DensePolynomial diff_quotient_polynomial(const DensePolynomial& p, const MultiIndex& eps,
                                         std::span<const Rational> h) {
  if (eps.size() != p.dim() || h.size() != p.dim()) {
    throw DimensionError("diff_quotient_polynomial: dimension mismatch");
  }
  detail::check_increment(h);
  DensePolynomial out(p.dim());
  std::vector<Rational> offset(p.dim());
  for_each_below(eps, [&](const MultiIndex& gamma) {
    for (std::size_t i = 0; i < offset.size(); ++i) offset[i] = Rational(gamma[i]) * h[i];
    out += p.shifted(offset).scaled(detail::signed_binomial_weight<Rational>(eps, gamma));
  });
  Rational denom = 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (int k = 0; k < eps[i]; ++k) denom *= h[i];
  }
  return out.scaled(1 / denom);
}

bool annihilation_check(const DensePolynomial& p, const MultiIndex& eps, std::span<const Rational> h) {
  return diff_quotient_polynomial(p, eps, h).is_zero();
}

}  // namespace conic
