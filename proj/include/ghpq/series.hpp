#pragma once

// Bivariate formal power series in (u, v) truncated at total order N:
// only coefficients of u^i v^j with i + j <= N are tracked. Coefficients
// are polynomials in the remaining ring variables.

#include <cstddef>
#include <string>
#include <vector>

#include "ghpq/errors.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

class SeriesUV {
 public:
  explicit SeriesUV(int order) : order_(order) {
    if (order < 0) throw DomainError("negative truncation order");
    coeffs_.resize(slot_count(order));
  }

  /// Constant series c.
  static SeriesUV constant(int order, const Poly& c) {
    SeriesUV s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// Reads u and v out of `p` as series indices; terms above the order are dropped.
  static SeriesUV from_poly(const Poly& p, int order) {
    SeriesUV s(order);
    std::vector<std::vector<Term>> buckets(s.coeffs_.size());
    for (const auto& t : p.terms()) {
      int i = t.mono.exp(Var::u), j = t.mono.exp(Var::v);
      if (i + j > order) continue;
      Monomial m = t.mono;
      m.set(Var::u, 0);
      m.set(Var::v, 0);
      buckets[slot(i, j)].push_back({m, t.coeff});
    }
    for (std::size_t k = 0; k < buckets.size(); ++k) s.coeffs_[k] = Poly::from_terms(std::move(buckets[k]));
    return s;
  }

  /// The inverse of from_poly: Σ c_ij u^i v^j as one polynomial.
  Poly to_poly() const {
    Poly out;
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j) {
        const Poly& c = coeffs_[slot(i, j)];
        if (c.is_zero()) continue;
        out += c.shifted(Monomial::of({{Var::u, i}, {Var::v, j}}));
      }
    return out;
  }

  int order() const { return order_; }

  const Poly& coeff(int i, int j) const {
    if (i < 0 || j < 0) throw DomainError("negative series index");
    if (i + j > order_)
      throw OutOfTruncation("coefficient u^" + std::to_string(i) + " v^" + std::to_string(j) +
                            " lies beyond truncation order " + std::to_string(order_));
    return coeffs_[slot(i, j)];
  }

  void set(int i, int j, Poly c) {
    if (i < 0 || j < 0 || i + j > order_) throw OutOfTruncation("series slot outside truncation");
    coeffs_[slot(i, j)] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Same series re-truncated at a lower order.
  SeriesUV truncated(int order) const {
    if (order > order_) throw OutOfTruncation("cannot raise the truncation order");
    SeriesUV s(order);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) s.coeffs_[slot(i, j)] = coeffs_[slot(i, j)];
    return s;
  }

  friend SeriesUV operator+(const SeriesUV& a, const SeriesUV& b) {
    check_same(a, b);
    SeriesUV r(a.order_);
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }
  friend SeriesUV operator-(const SeriesUV& a, const SeriesUV& b) {
    check_same(a, b);
    SeriesUV r(a.order_);
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }
  SeriesUV& operator+=(const SeriesUV& o) { return *this = *this + o; }

  friend SeriesUV operator*(const SeriesUV& a, const SeriesUV& b) {
    check_same(a, b);
    const int n = a.order_;
    SeriesUV r(n);
    for (int i1 = 0; i1 <= n; ++i1)
      for (int j1 = 0; i1 + j1 <= n; ++j1) {
        const Poly& x = a.coeffs_[slot(i1, j1)];
        if (x.is_zero()) continue;
        for (int i2 = 0; i1 + j1 + i2 <= n; ++i2)
          for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
            const Poly& y = b.coeffs_[slot(i2, j2)];
            if (y.is_zero()) continue;
            auto& dst = r.coeffs_[slot(i1 + i2, j1 + j2)];
            dst += x * y;
          }
      }
    return r;
  }
  SeriesUV& operator*=(const SeriesUV& o) { return *this = *this * o; }

  SeriesUV scaled(const Poly& c) const {
    SeriesUV r(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
  }

  /// Multiplication by u^du v^dv (exact: slots pushed past the order are dropped).
  SeriesUV shifted(int du, int dv) const {
    SeriesUV r(order_);
    for (int i = 0; i + du <= order_; ++i)
      for (int j = 0; i + du + j + dv <= order_; ++j) r.coeffs_[slot(i + du, j + dv)] = coeffs_[slot(i, j)];
    return r;
  }

  /// ∂_u^ku ∂_v^kv. The result is exact through order N - ku - kv and is
  /// returned truncated there.
  SeriesUV derivative(int ku, int kv) const {
    int n = order_ - ku - kv;
    if (n < 0) throw OutOfTruncation("derivative exhausts the truncation order");
    SeriesUV r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Rational f = factorial(i + ku) / factorial(i) * (factorial(j + kv) / factorial(j));
        r.coeffs_[slot(i, j)] = coeffs_[slot(i + ku, j + kv)].scaled(f);
      }
    return r;
  }

  SeriesUV pow(int k) const {
    SeriesUV r = constant(order_, Poly(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const SeriesUV& a, const SeriesUV& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  // Slots are laid out by total order: (0,0), (1,0), (0,1), (2,0), ...
  static std::size_t slot_count(int order) {
    return static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 2) / 2;
  }
  static std::size_t slot(int i, int j) {
    int d = i + j;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 + static_cast<std::size_t>(j);
  }
  static void check_same(const SeriesUV& a, const SeriesUV& b) {
    if (a.order_ != b.order_) throw DomainError("series truncation orders differ");
  }

  int order_;
  std::vector<Poly> coeffs_;
};

/// exp(arg) = Σ_k arg^k / k!, truncated. The constant term must vanish.
inline SeriesUV series_exp(const SeriesUV& arg) {
  if (!arg.coeff(0, 0).is_zero())
    throw DomainError("series_exp needs an argument with zero constant term");
  const int n = arg.order();
  SeriesUV sum = SeriesUV::constant(n, Poly(1));
  SeriesUV power = sum;
  for (int k = 1; k <= n; ++k) {
    power = (power * arg).scaled(Poly(Rational(1, k)));
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

inline const Poly& series_coeff(const SeriesUV& s, int i, int j) { return s.coeff(i, j); }

/// (1 - base)^(-exponent) = Σ_k (exponent)_k base^k / k!, truncated.
inline SeriesUV series_binomial_neg(const SeriesUV& base, const Rational& exponent) {
  if (!base.coeff(0, 0).is_zero())
    throw DomainError("binomial series needs a base with zero constant term");
  const int n = base.order();
  SeriesUV sum = SeriesUV::constant(n, Poly(1));
  SeriesUV power = sum;
  for (int k = 1; k <= n; ++k) {
    power = (power * base).scaled(Poly((exponent + Rational(k - 1)) / Rational(k)));
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

/// Overload taking the base as a polynomial in u, v (for example u*z).
inline SeriesUV series_binomial_neg(const Poly& base, const Rational& exponent, int order) {
  return series_binomial_neg(SeriesUV::from_poly(base, order), exponent);
}

}  // namespace ghpq
