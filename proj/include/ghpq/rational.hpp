#pragma once

// Exact rational scalar. Thin value wrapper over GMP's mpq_class that keeps
// the canonical form (gcd(|num|, den) = 1, den > 0) after every operation.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ghpq/errors.hpp"

namespace ghpq {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Parses "a", "-a", "a/b" with decimal integers; rejects b == 0.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto valid_int = [](std::string_view d) {
      if (d.empty()) return false;
      std::size_t i = (d[0] == '-' || d[0] == '+') ? 1 : 0;
      if (i == d.size()) return false;
      for (; i < d.size(); ++i)
        if (d[i] < '0' || d[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("malformed rational literal '" + s + "'", 0);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DomainError("rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  static Rational from_parts(const std::string& num, const std::string& den) {
    return parse(num + "/" + den);
  }

  const mpq_class& raw() const { return q_; }

  std::string num_str() const { return q_.get_num().get_str(10); }
  std::string den_str() const { return q_.get_den().get_str(10); }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  /// "n" when the denominator is 1, "n/d" otherwise.
  std::string str() const {
    return is_integer() ? num_str() : num_str() + "/" + den_str();
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  /// Integer power; negative exponents invert.
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw DomainError("zero to a negative power");
      return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
  }

 private:
  mpq_class q_{0};
};

inline Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// C(n, k) with the convention C(n, k) = 0 unless 0 <= k <= n.
inline Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1.
inline Rational rising(const Rational& x, long k) {
  if (k < 0) throw DomainError("negative Pochhammer length");
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= x + Rational(i);
  return r;
}

/// 1/n! with 1/n! = 0 for negative n (reciprocal Gamma at poles).
inline Rational inv_factorial(long n) {
  if (n < 0) return Rational(0);
  return Rational(1) / factorial(n);
}

}  // namespace ghpq
