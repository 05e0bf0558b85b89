#pragma once

// Seeded property checks for the heat solver: residual, initial value,
// linearity and the semigroup law on random initial data.

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ghpq/heat.hpp"
#include "ghpq/io/format.hpp"

namespace ghpq {

/// Draws from the raw engine output so the stream is identical on every
/// standard library.
class SeededDraw {
 public:
  explicit SeededDraw(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Up to `max_terms` terms in z, w, each exponent <= max_deg.
  Poly poly_zw(int max_deg, int max_terms) {
    std::vector<Term> terms;
    const int count = uniform(1, max_terms);
    for (int i = 0; i < count; ++i) {
      Monomial m;
      m.set(Var::z, uniform(0, max_deg));
      m.set(Var::w, uniform(0, max_deg));
      terms.push_back({m, Rational(uniform(-9, 9), uniform(1, 5))});
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<std::pair<int, int>>& heat_orders() {
  static const std::vector<std::pair<int, int>> o = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1},
                                                     {1, 3}, {3, 3}, {2, 0}, {0, 2}};
  return o;
}

inline const std::vector<Rational>& heat_constants() {
  static const std::vector<Rational> c = {Rational(1), Rational(-1), Rational(3, 7)};
  return c;
}

/// Re-solves every t-slice of u for time t' and resums.
inline Poly evolve_again(const HeatProblem& pb, const Poly& u) {
  const Poly t = Poly::var(Var::t), tp = Poly::var(Var::t_prime);
  Poly out;
  for (int k = 0; k <= u.degree(Var::t); ++k) {
    std::vector<Term> slice;
    for (const auto& term : u.terms())
      if (term.mono.exp(Var::t) == k) {
        Monomial m = term.mono;
        m.set(Var::t, 0);
        slice.push_back({m, term.coeff});
      }
    HeatProblem next = pb;
    next.initial = Poly::from_terms(std::move(slice));
    out += solve(next).u.subst({{Var::t, tp}}) * t.pow(k);
  }
  return out;
}

struct HeatCaseResult {
  int index = 0;
  int p = 0, q = 0;
  Rational c;
  std::string initial;
  bool residual_zero = false;
  bool initial_value = false;
  bool linear = false;
  bool semigroup = false;

  bool passed() const { return residual_zero && initial_value && linear && semigroup; }

  nlohmann::json to_json() const {
    return {{"index", index},          {"p", p},
            {"q", q},                  {"c", c.str()},
            {"initial", initial},      {"residual_zero", residual_zero},
            {"initial_value", initial_value}, {"linearity", linear},
            {"semigroup", semigroup},  {"passed", passed()}};
  }
};

struct HeatSuiteResult {
  std::uint64_t seed = 0;
  std::vector<HeatCaseResult> cases;

  long failures() const {
    long f = 0;
    for (const auto& c : cases) f += !c.passed();
    return f;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) arr.push_back(c.to_json());
    return {{"seed", seed}, {"cases", static_cast<long>(cases.size())}, {"failures", failures()}, {"results", arr}};
  }
};

/// `count` random initial data, each run under every order pair and constant.
inline HeatSuiteResult heat_random_suite(std::uint64_t seed, int count = 25, int max_deg = 6) {
  SeededDraw draw(seed);
  HeatSuiteResult out;
  out.seed = seed;
  for (int i = 0; i < count; ++i) {
    const Poly f = draw.poly_zw(max_deg, 8);
    const Poly g = draw.poly_zw(max_deg, 4);
    const Rational lam(draw.uniform(-7, 7), draw.uniform(1, 3));
    for (auto [p, q] : heat_orders())
      for (const Rational& c : heat_constants()) {
        HeatProblem pb{p, q, c, f};
        HeatCaseResult r;
        r.index = i;
        r.p = p;
        r.q = q;
        r.c = c;
        r.initial = to_text(f);
        const Poly u = solve(pb).u;
        r.residual_zero = residual(pb, u).is_zero();
        r.initial_value = at_time_zero(u) == f;
        HeatProblem pg{p, q, c, g}, combo{p, q, c, f.scaled(lam) + g};
        r.linear = solve(combo).u == u.scaled(lam) + solve(pg).u;
        r.semigroup = evolve_again(pb, u) == u.subst({{Var::t, Poly::var(Var::t) + Poly::var(Var::t_prime)}});
        out.cases.push_back(std::move(r));
      }
  }
  return out;
}

}  // namespace ghpq
