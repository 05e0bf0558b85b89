#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Terms are kept in a vector sorted by the canonical monomial order
// (graded lexicographic over the fixed variable order below, largest first),
// with no zero coefficients stored. Every operation returns a new value.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghpq/errors.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

/// Ring variables in canonical order. The order is part of the serialization
/// contract: changing it reorders every printed polynomial.
enum class Var : std::uint8_t {
  z,
  w,
  gamma,
  t,
  z_prime,
  w_prime,
  gamma_prime,
  t_prime,
  a,
  b,
  c,
  r,
  u,
  v,
};

inline constexpr std::size_t kNumVars = 14;

inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::z, Var::w, Var::gamma, Var::t, Var::z_prime, Var::w_prime, Var::gamma_prime,
    Var::t_prime, Var::a, Var::b, Var::c, Var::r, Var::u, Var::v};

/// ASCII spelling used on every output channel.
inline constexpr std::string_view var_name(Var v) {
  constexpr std::array<std::string_view, kNumVars> names = {
      "z", "w", "g", "t", "zp", "wp", "gp", "tp", "a", "b", "c", "r", "u", "v"};
  return names[static_cast<std::size_t>(v)];
}

inline constexpr std::string_view var_latex(Var v) {
  constexpr std::array<std::string_view, kNumVars> names = {
      "z", "w", "\\gamma", "t", "z'", "w'", "\\gamma'", "t'", "a", "b", "c", "r", "u", "v"};
  return names[static_cast<std::size_t>(v)];
}

/// Accepts the ASCII names plus the aliases `gamma`, primes written as `'`,
/// and the Unicode spellings γ and ′.
inline std::optional<Var> var_from_name(std::string_view s) {
  static const std::map<std::string, Var, std::less<>> table = {
      {"z", Var::z},           {"w", Var::w},           {"g", Var::gamma},
      {"gamma", Var::gamma},   {"\xCE\xB3", Var::gamma}, {"t", Var::t},
      {"zp", Var::z_prime},    {"z'", Var::z_prime},    {"z\xE2\x80\xB2", Var::z_prime},
      {"wp", Var::w_prime},    {"w'", Var::w_prime},    {"w\xE2\x80\xB2", Var::w_prime},
      {"gp", Var::gamma_prime}, {"g'", Var::gamma_prime}, {"gamma'", Var::gamma_prime},
      {"gammap", Var::gamma_prime}, {"\xCE\xB3'", Var::gamma_prime},
      {"\xCE\xB3\xE2\x80\xB2", Var::gamma_prime},
      {"tp", Var::t_prime},    {"t'", Var::t_prime},    {"t\xE2\x80\xB2", Var::t_prime},
      {"a", Var::a},           {"b", Var::b},           {"c", Var::c},
      {"r", Var::r},           {"u", Var::u},           {"v", Var::v}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// Exponent vector. Slot 0 holds the total degree so that a plain byte
/// comparison realizes the graded lexicographic order.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial of(std::initializer_list<std::pair<Var, int>> powers) {
    Monomial m;
    for (auto [v, k] : powers) m.set(v, m.exp(v) + k);
    return m;
  }

  int exp(Var v) const { return e_[idx(v)]; }
  int degree() const { return e_[0]; }

  void set(Var v, int k) {
    if (k < 0) throw DomainError("negative exponent");
    int total = e_[0] - e_[idx(v)] + k;
    if (k > 255 || total > 255) throw DomainError("monomial degree exceeds 255");
    e_[idx(v)] = static_cast<std::uint8_t>(k);
    e_[0] = static_cast<std::uint8_t>(total);
  }

  bool is_one() const { return e_[0] == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      unsigned s = unsigned{a.e_[i]} + b.e_[i];
      if (s > 255) throw DomainError("monomial degree exceeds 255");
      r.e_[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  /// Canonical order: true when `a` is printed before `b`.
  friend bool precedes(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e_.data(), b.e_.data(), a.e_.size()) > 0;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e_.data(), b.e_.data(), a.e_.size()) < 0;
  }

 private:
  static std::size_t idx(Var v) { return static_cast<std::size_t>(v) + 1; }
  std::array<std::uint8_t, 16> e_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT

  static Poly var(Var v, int k = 1) {
    Monomial m;
    m.set(v, k);
    return term(m, Rational(1));
  }

  static Poly term(const Monomial& m, const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  Rational coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return precedes(t.mono, k); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
  }

  /// Highest exponent of `v`; -1 for the zero polynomial.
  int degree(Var v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
    return d;
  }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool uses(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exp(v) > 0; });
  }

  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.is_integer(); });
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.is_constant()) return b.scaled(a.constant_term());
    if (b.is_constant()) return a.scaled(b.constant_term());
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
    return from_terms(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const {
    if (c.is_zero()) return Poly{};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Poly shifted(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  Poly pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    Poly result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// k-fold partial derivative with respect to `v`.
  Poly diff(Var v, int k = 1) const {
    if (k < 0) throw DomainError("negative derivative order");
    if (k == 0) return *this;
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = t.mono.exp(v);
      if (e < k) continue;
      Rational f(1);
      for (int i = 0; i < k; ++i) f *= Rational(e - i);
      Monomial m = t.mono;
      m.set(v, e - k);
      out.push_back({m, t.coeff * f});
    }
    return from_terms(std::move(out));
  }

  /// Simultaneous substitution; unbound variables pass through unchanged.
  Poly subst(const std::map<Var, Poly>& bindings) const {
    if (bindings.empty()) return *this;
    std::map<std::pair<Var, int>, Poly> powers;
    auto power_of = [&](Var v, int e) -> const Poly& {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
      return it->second;
    };
    std::vector<Term> passthrough;
    Poly acc;
    for (const auto& t : terms_) {
      Monomial rest = t.mono;
      Poly factor(t.coeff);
      bool touched = false;
      for (const auto& [v, _] : bindings) {
        int e = rest.exp(v);
        if (e == 0) continue;
        rest.set(v, 0);
        factor *= power_of(v, e);
        touched = true;
      }
      if (!touched) {
        passthrough.push_back(t);
      } else if (!factor.is_zero()) {
        acc += factor.shifted(rest);
      }
    }
    return acc + from_terms(std::move(passthrough));
  }

  /// Coefficient of v^e, as a polynomial free of `v`.
  Poly coefficient_of(Var v, int e) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono.exp(v) != e) continue;
      Monomial m = t.mono;
      m.set(v, 0);
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(out));
  }

  /// Exchanges two variables.
  Poly swapped(Var x, Var y) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      int ex = m.exp(x), ey = m.exp(y);
      m.set(x, ey);
      m.set(y, ex);
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(out));
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return precedes(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool negate_b) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && precedes(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || precedes(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, negate_b ? -b.terms_[j].coeff : b.terms_[j].coeff});
        ++j;
      } else {
        Rational c = negate_b ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

namespace vars {
inline Poly z() { return Poly::var(Var::z); }
inline Poly w() { return Poly::var(Var::w); }
inline Poly gamma() { return Poly::var(Var::gamma); }
inline Poly t() { return Poly::var(Var::t); }
}  // namespace vars

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly poly_diff(const Poly& a, Var v, int k) { return a.diff(v, k); }
inline Poly poly_subst(const Poly& a, const std::map<Var, Poly>& bindings) { return a.subst(bindings); }

}  // namespace ghpq
