#pragma once

#include <random>
#include <vector>

#include "ghpq/io/parse.hpp"
#include "ghpq/poly.hpp"

namespace ghpq::testing {

inline Poly P(const char* src) { return parse_poly(src); }

/// Random polynomial in `vars` with every exponent <= max_deg and small
/// rational coefficients. Deterministic for a given engine state.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg, int max_terms) {
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  std::vector<Term> terms;
  int count = draw(0, max_terms);
  for (int i = 0; i < count; ++i) {
    Monomial m;
    for (Var v : vars) m.set(v, draw(0, max_deg));
    terms.push_back({m, Rational(draw(-9, 9), draw(1, 4))});
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace ghpq::testing
