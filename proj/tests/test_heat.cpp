#include <gtest/gtest.h>

#include <random>

#include "ghpq/heat.hpp"
#include "support.hpp"

using namespace ghpq;
using ghpq::testing::P;
using ghpq::testing::random_poly;

namespace {

HeatProblem problem(int p, int q, Rational c, Poly f) { return {p, q, std::move(c), std::move(f)}; }

const std::vector<std::pair<int, int>> kOrders = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1},
                                                  {1, 3}, {3, 3}, {2, 0}, {0, 2}};

}  // namespace

TEST(Heat, Examples) {
  EXPECT_EQ(solve(problem(1, 1, Rational(1), P("z^2*w"))).u, P("z^2*w + 2*t*z"));
  EXPECT_EQ(solve(problem(2, 0, Rational(1), P("z^3"))).u, P("z^3 + 6*t*z"));
  for (auto [p, q] : kOrders) EXPECT_EQ(solve(problem(p, q, Rational(3, 7), Poly(1))).u, Poly(1));
}

TEST(Heat, ResidualExamples) {
  auto pb = problem(1, 1, Rational(1), P("z^2*w"));
  EXPECT_TRUE(residual(pb, solve(pb).u).is_zero());
  EXPECT_EQ(residual(pb, pb.initial), P("2*z"));
  auto degenerate = problem(1, 1, Rational(0), P("z^2*w"));
  EXPECT_TRUE(residual(degenerate, degenerate.initial).is_zero());
}

TEST(Heat, InvalidProblems) {
  EXPECT_THROW(solve(problem(0, 0, Rational(1), P("z"))), InvalidParams);
  EXPECT_THROW(solve(problem(1, 1, Rational(1), P("z*g"))), InvalidParams);
  EXPECT_THROW(solve(problem(-1, 1, Rational(1), P("z"))), InvalidParams);
}

TEST(Heat, RandomDataSolvedExactly) {
  std::mt19937_64 rng(7);
  for (auto [p, q] : kOrders)
    for (const Rational& c : {Rational(1), Rational(-1), Rational(3, 7)})
      for (int trial = 0; trial < 4; ++trial) {
        auto pb = problem(p, q, c, random_poly(rng, {Var::z, Var::w}, 6, 6));
        Poly u = solve(pb).u;
        EXPECT_TRUE(residual(pb, u).is_zero());
        EXPECT_EQ(at_time_zero(u), pb.initial);
      }
}

TEST(Heat, Linearity) {
  std::mt19937_64 rng(11);
  for (auto [p, q] : kOrders) {
    Poly f = random_poly(rng, {Var::z, Var::w}, 5, 5);
    Poly g = random_poly(rng, {Var::z, Var::w}, 5, 5);
    const Rational c(-2, 3), lam(5, 4);
    auto S = [&](const Poly& x) { return solve(problem(p, q, c, x)).u; };
    EXPECT_EQ(S(f + g), S(f) + S(g));
    EXPECT_EQ(S(f.scaled(lam)), S(f).scaled(lam));
  }
}

// Solve to t, re-solve the result from that state for t', compare with t + t'.
TEST(Heat, Semigroup) {
  std::mt19937_64 rng(13);
  const Poly t = Poly::var(Var::t), tp = Poly::var(Var::t_prime);
  for (auto [p, q] : kOrders) {
    Poly f = random_poly(rng, {Var::z, Var::w}, 5, 4);
    const Rational c(3, 7);
    Poly u1 = solve(problem(p, q, c, f)).u;
    Poly two_step;
    for (int k = 0; k <= u1.degree(Var::t); ++k) {
      Poly slice;
      for (const auto& term : u1.terms())
        if (term.mono.exp(Var::t) == k) {
          Monomial m = term.mono;
          m.set(Var::t, 0);
          slice += Poly::term(m, term.coeff);
        }
      Poly evolved = solve(problem(p, q, c, slice)).u.subst({{Var::t, tp}});
      two_step += evolved * t.pow(k);
    }
    EXPECT_EQ(two_step, u1.subst({{Var::t, t + tp}}));
  }
}
