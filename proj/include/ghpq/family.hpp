#pragma once

// Two-variable (p,q) Gould-Hopper polynomials H_{n,m}^{(p,q)}(z, w | γ) and
// the one-variable H_n^{(p)}(z | γ), built by independent strategies.
// explicit_sum() is the ground truth everything else is compared against.

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ghpq/errors.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"
#include "ghpq/series.hpp"

namespace ghpq {

struct FamilyParams {
  int p = 1;
  int q = 1;
  int n = 0;
  int m = 0;

  /// Throws InvalidParams for negative entries or p = q = 0 (the latter is
  /// e^γ z^n w^m, which is not a polynomial).
  void validate() const {
    if (p < 0 || q < 0 || n < 0 || m < 0)
      throw InvalidParams("family parameters must be nonnegative");
    if (p + q < 1) throw InvalidParams("p = q = 0 is not a polynomial family (p + q >= 1 required)");
  }

  /// ⌊n/p⌋ ∧ ⌊m/q⌋ with ⌊j/0⌋ = +∞.
  int k_max() const {
    int a = p == 0 ? std::numeric_limits<int>::max() : n / p;
    int b = q == 0 ? std::numeric_limits<int>::max() : m / q;
    return std::min(a, b);
  }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct GHPoly {
  FamilyParams params;
  Poly poly;
};

/// n! m! Σ_k γ^k/k! z^{n-pk}/(n-pk)! w^{m-qk}/(m-qk)!.
inline Poly explicit_sum(const FamilyParams& fp) {
  fp.validate();
  std::vector<Term> terms;
  const Rational scale = factorial(fp.n) * factorial(fp.m);
  for (int k = 0; k <= fp.k_max(); ++k) {
    Rational c = scale / (factorial(k) * factorial(fp.n - fp.p * k) * factorial(fp.m - fp.q * k));
    terms.push_back({Monomial::of({{Var::z, fp.n - fp.p * k}, {Var::w, fp.m - fp.q * k}, {Var::gamma, k}}), c});
  }
  return Poly::from_terms(std::move(terms));
}

inline GHPoly explicit_gh(const FamilyParams& fp) { return {fp, explicit_sum(fp)}; }

/// H_{n,m}^{(p,q)} with the convention that negative degree indices give 0.
inline Poly gh_or_zero(int p, int q, int n, int m) {
  if (n < 0 || m < 0) return Poly{};
  return explicit_sum({p, q, n, m});
}

/// The one-variable polynomial H_n^{(p)}(z | γ), in z and γ.
inline Poly gould_hopper_1d(int n, int p) {
  if (p < 1) throw InvalidParams("Gould-Hopper order p must be positive");
  if (n < 0) throw InvalidParams("degree must be nonnegative");
  std::vector<Term> terms;
  for (int k = 0; k <= n / p; ++k) {
    Rational c = factorial(n) / (factorial(k) * factorial(n - p * k));
    terms.push_back({Monomial::of({{Var::z, n - p * k}, {Var::gamma, k}}), c});
  }
  return Poly::from_terms(std::move(terms));
}

inline Poly gould_hopper_1d_or_zero(int n, int p) {
  return n < 0 ? Poly{} : gould_hopper_1d(n, p);
}

/// ∂_z^j ∂_w^k.
inline Poly mixed_partial(const Poly& f, int j, int k) { return f.diff(Var::z, j).diff(Var::w, k); }

/// e^{γ ∂_z^p ∂_w^q} {z^n w^m}; the series stops once the derivative vanishes.
inline Poly operational(const FamilyParams& fp) {
  fp.validate();
  Poly power = Poly::var(Var::z, fp.n) * Poly::var(Var::w, fp.m);
  Poly sum;
  Poly gamma_k(1);
  for (int k = 0; !power.is_zero(); ++k) {
    sum += (power * gamma_k).scaled(inv_factorial(k));
    power = mixed_partial(power, fp.p, fp.q);
    gamma_k *= vars::gamma();
  }
  return sum;
}

/// Raising operator z + p γ ∂_z^{p-1} ∂_w^q (requires p >= 1).
inline Poly raise_z(const Poly& f, int p, int q) {
  return vars::z() * f + (vars::gamma() * mixed_partial(f, p - 1, q)).scaled(Rational(p));
}

/// Raising operator w + q γ ∂_z^p ∂_w^{q-1} (requires q >= 1).
inline Poly raise_w(const Poly& f, int p, int q) {
  return vars::w() * f + (vars::gamma() * mixed_partial(f, p, q - 1)).scaled(Rational(q));
}

/// Iterated creation operators applied to 1 (or to a monomial when one of
/// p, q vanishes).
inline Poly via_creation(const FamilyParams& fp) {
  fp.validate();
  Poly h;
  if (fp.p >= 1 && fp.q >= 1) {
    h = Poly(1);
    for (int i = 0; i < fp.m; ++i) h = raise_w(h, fp.p, fp.q);
    for (int i = 0; i < fp.n; ++i) h = raise_z(h, fp.p, fp.q);
  } else if (fp.q == 0) {
    h = Poly::var(Var::w, fp.m);
    for (int i = 0; i < fp.n; ++i) h = raise_z(h, fp.p, 0);
  } else {
    h = Poly::var(Var::z, fp.n);
    for (int i = 0; i < fp.m; ++i) h = raise_w(h, 0, fp.q);
  }
  return h;
}

/// Table H_{i,j} for i <= n, j <= m from the two raising recurrences
///   H_{i+1,j} = z H_{i,j} + γ p! q! C(i,p-1) C(j,q)   H_{i+1-p, j-q}
///   H_{i,j+1} = w H_{i,j} + γ p! q! C(i,p)   C(j,q-1) H_{i-p,   j+1-q}
inline std::vector<std::vector<Poly>> recurrence_table(const FamilyParams& fp) {
  fp.validate();
  const int p = fp.p, q = fp.q;
  const Rational pq_fact = factorial(p) * factorial(q);
  std::vector<std::vector<Poly>> h(fp.n + 1, std::vector<Poly>(fp.m + 1));
  auto at = [&](int i, int j) -> Poly { return (i < 0 || j < 0) ? Poly{} : h[i][j]; };
  h[0][0] = Poly(1);
  for (int j = 0; j < fp.m; ++j) {
    Rational c = pq_fact * binomial(0, p) * binomial(j, q - 1);
    h[0][j + 1] = vars::w() * h[0][j] + (vars::gamma() * at(0 - p, j + 1 - q)).scaled(c);
  }
  for (int i = 0; i < fp.n; ++i)
    for (int j = 0; j <= fp.m; ++j) {
      Rational c = pq_fact * binomial(i, p - 1) * binomial(j, q);
      h[i + 1][j] = vars::z() * h[i][j] + (vars::gamma() * at(i + 1 - p, j - q)).scaled(c);
    }
  return h;
}

inline Poly via_recurrence(const FamilyParams& fp) { return recurrence_table(fp)[fp.n][fp.m]; }

/// zu + wv + γ u^p v^q as a polynomial.
inline Poly genfun_exponent(int p, int q) {
  return vars::z() * Poly::var(Var::u) + vars::w() * Poly::var(Var::v) +
         vars::gamma() * Poly::var(Var::u, p) * Poly::var(Var::v, q);
}

/// e^{zu + wv + γ u^p v^q} truncated at total order `order`.
inline SeriesUV genfun_series(int p, int q, int order) {
  return series_exp(SeriesUV::from_poly(genfun_exponent(p, q), order));
}

/// n! m! [u^n v^m] e^{zu + wv + γ u^p v^q}.
inline Poly via_genfun(const FamilyParams& fp, int order) {
  fp.validate();
  if (order < fp.n + fp.m)
    throw OutOfTruncation("generating-function order " + std::to_string(order) + " is below n + m = " +
                          std::to_string(fp.n + fp.m));
  SeriesUV e = genfun_series(fp.p, fp.q, order);
  return e.coeff(fp.n, fp.m).scaled(factorial(fp.n) * factorial(fp.m));
}

/// Terminating p+q F 0 representation; every term is formed directly as the
/// monomial z^{n-pk} w^{m-qk}.
inline Poly hypergeom_form(const FamilyParams& fp) {
  fp.validate();
  if (fp.p < 1 || fp.q < 1)
    throw Unsupported("hypergeometric form needs p >= 1 and q >= 1");
  const int p = fp.p, q = fp.q, n = fp.n, m = fp.m;
  const Rational arg_scale = Rational(-p).pow(p) * Rational(-q).pow(q);
  std::vector<Term> terms;
  for (int k = 0;; ++k) {
    Rational prod(1);
    for (int j = 1; j <= p; ++j) prod *= rising(Rational(j - 1 - n, p), k);
    for (int j = 1; j <= q; ++j) prod *= rising(Rational(j - 1 - m, q), k);
    if (prod.is_zero()) break;
    if (n - p * k < 0 || m - q * k < 0)
      throw DomainError("hypergeometric series failed to terminate");  // unreachable for valid input
    Rational c = prod * arg_scale.pow(k) / factorial(k);
    terms.push_back({Monomial::of({{Var::z, n - p * k}, {Var::w, m - q * k}, {Var::gamma, k}}), c});
  }
  return Poly::from_terms(std::move(terms));
}

/// H_{n,m}^{(p,q)}(0, 0 | γ).
inline Poly origin_value(const FamilyParams& fp) {
  return explicit_sum(fp).subst({{Var::z, Poly(0)}, {Var::w, Poly(0)}});
}

enum class Strategy { explicit_sum, operational, creation, recurrence, genfun, hypergeom };

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::explicit_sum: return "explicit";
    case Strategy::operational: return "operational";
    case Strategy::creation: return "creation";
    case Strategy::recurrence: return "recurrence";
    case Strategy::genfun: return "genfun";
    case Strategy::hypergeom: return "hypergeom";
  }
  return "?";
}

inline Strategy strategy_from_name(std::string_view s) {
  for (auto st : {Strategy::explicit_sum, Strategy::operational, Strategy::creation, Strategy::recurrence,
                  Strategy::genfun, Strategy::hypergeom})
    if (strategy_name(st) == s) return st;
  throw InvalidParams("unknown strategy '" + std::string(s) + "'");
}

inline GHPoly compute(const FamilyParams& fp, Strategy s) {
  switch (s) {
    case Strategy::explicit_sum: return {fp, explicit_sum(fp)};
    case Strategy::operational: return {fp, operational(fp)};
    case Strategy::creation: return {fp, via_creation(fp)};
    case Strategy::recurrence: return {fp, via_recurrence(fp)};
    case Strategy::genfun: return {fp, via_genfun(fp, fp.n + fp.m)};
    case Strategy::hypergeom: return {fp, hypergeom_form(fp)};
  }
  throw InvalidParams("unknown strategy");
}

/// Substitutes z, w, γ simultaneously.
inline Poly at(const Poly& h, const Poly& z, const Poly& w, const Poly& g) {
  return h.subst({{Var::z, z}, {Var::w, w}, {Var::gamma, g}});
}

}  // namespace ghpq
