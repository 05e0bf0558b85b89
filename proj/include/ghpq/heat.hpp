#pragma once

// Polynomial solutions of c d_z^p d_w^q u = d_t u. Each monomial z^a w^b of
// the initial datum is sent to H_{a,b}^{(p,q)}(z, w | c t).

#include <map>

#include "ghpq/errors.hpp"
#include "ghpq/family.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

struct HeatProblem {
  int p = 1;
  int q = 1;
  Rational c{1};
  Poly initial;

  void validate() const {
    if (p < 0 || q < 0) throw InvalidParams("heat orders must be nonnegative");
    if (p + q < 1) throw InvalidParams("heat equation needs p + q >= 1");
    for (const auto& t : initial.terms())
      for (Var v : kAllVars)
        if (v != Var::z && v != Var::w && t.mono.exp(v) > 0)
          throw InvalidParams("initial datum may only use z and w, found '" + std::string(var_name(v)) + "'");
  }
};

struct HeatSolution {
  Poly u;  // in z, w, t
};

/// c d_z^p d_w^q u - d_t u.
inline Poly residual(const HeatProblem& pb, const Poly& u) {
  return u.diff(Var::z, pb.p).diff(Var::w, pb.q).scaled(pb.c) - u.diff(Var::t, 1);
}

inline HeatSolution solve(const HeatProblem& pb) {
  pb.validate();
  const Poly ct = Poly::var(Var::t).scaled(pb.c);
  std::map<std::pair<int, int>, Poly> cache;
  Poly u;
  for (const auto& term : pb.initial.terms()) {
    const int a = term.mono.exp(Var::z), b = term.mono.exp(Var::w);
    auto it = cache.find({a, b});
    if (it == cache.end())
      it = cache.emplace(std::make_pair(a, b), explicit_sum({pb.p, pb.q, a, b}).subst({{Var::gamma, ct}})).first;
    u += it->second.scaled(term.coeff);
  }
  return {std::move(u)};
}

/// u with t -> 0.
inline Poly at_time_zero(const Poly& u) { return u.subst({{Var::t, Poly(0)}}); }

}  // namespace ghpq
