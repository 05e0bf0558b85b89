#include <gtest/gtest.h>

#include <vector>

#include "ghpq/family.hpp"
#include "support.hpp"

namespace ghpq {
namespace {

using testing::P;

Poly gamma_to(const Poly& h, const Poly& g) { return h.subst({{Var::gamma, g}}); }

TEST(Explicit, SmallCases) {
  EXPECT_EQ(explicit_sum({1, 1, 2, 1}), P("z^2*w + 2*g*z"));
  EXPECT_EQ(explicit_sum({2, 2, 2, 2}), P("z^2*w^2 + 4*g"));
  EXPECT_EQ(explicit_sum({2, 1, 2, 1}), P("z^2*w + 2*g"));
  // Itô-Hermite H_{1,1}(z, zbar) = z zbar - 1 with w standing in for zbar.
  EXPECT_EQ(gamma_to(explicit_sum({1, 1, 1, 1}), Poly(-1)), P("z*w - 1"));
}

TEST(Explicit, GammaZeroGivesMonomial) {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      if (p + q == 0) continue;
      for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
          EXPECT_EQ(gamma_to(explicit_sum({p, q, n, m}), Poly(0)), Poly::var(Var::z, n) * Poly::var(Var::w, m));
    }
}

TEST(Explicit, RejectsZeroOrders) {
  EXPECT_THROW(explicit_sum({0, 0, 1, 1}), InvalidParams);
  EXPECT_THROW(operational({0, 0, 1, 1}), InvalidParams);
  EXPECT_THROW(via_creation({0, 0, 1, 1}), InvalidParams);
  EXPECT_THROW(via_recurrence({0, 0, 1, 1}), InvalidParams);
  EXPECT_THROW(via_genfun({0, 0, 1, 1}, 4), InvalidParams);
  EXPECT_THROW(explicit_sum({1, 1, -1, 0}), InvalidParams);
}

TEST(Explicit, DegreesAndIntegrality) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 3}, {3, 0}, {0, 2}})
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m) {
        FamilyParams fp{p, q, n, m};
        Poly h = explicit_sum(fp);
        EXPECT_TRUE(h.has_integer_coefficients());
        EXPECT_EQ(h.degree(Var::z), n);
        EXPECT_EQ(h.degree(Var::w), m);
        EXPECT_EQ(h.degree(Var::gamma), fp.k_max());
      }
}

TEST(GouldHopper1d, Examples) {
  EXPECT_EQ(gould_hopper_1d(3, 2), P("z^3 + 6*g*z"));
  EXPECT_EQ(gould_hopper_1d(1, 2), P("z"));
  // Classical H_2(x) = 4x^2 - 2 through z -> 2x, γ -> -1 (x written as z).
  EXPECT_EQ(at(gould_hopper_1d(2, 2), P("2*z"), P("w"), Poly(-1)), P("4*z^2 - 2"));
  EXPECT_THROW(gould_hopper_1d(2, 0), InvalidParams);
}

TEST(GouldHopper1d, ReductionLadder) {
  for (int p = 1; p <= 3; ++p)
    for (int n = 0; n <= 7; ++n)
      for (int m = 0; m <= 3; ++m)
        EXPECT_EQ(explicit_sum({p, 0, n, m}), Poly::var(Var::w, m) * gould_hopper_1d(n, p));
}

TEST(Operational, Examples) {
  EXPECT_EQ(operational({1, 1, 2, 1}), P("z^2*w + 2*g*z"));
  EXPECT_EQ(operational({3, 1, 2, 1}), P("z^2*w"));
  EXPECT_EQ(operational({2, 0, 2, 0}), P("z^2 + 2*g"));
}

TEST(Creation, Examples) {
  EXPECT_EQ(via_creation({1, 1, 1, 1}), P("z*w + g"));
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(via_creation({1, 1, 0, m}), Poly::var(Var::w, m));
  EXPECT_EQ(via_creation({2, 0, 2, 3}), P("(z^2 + 2*g)*w^3"));
}

TEST(Recurrence, Examples) {
  EXPECT_EQ(via_recurrence({1, 1, 1, 1}), P("z*w + g"));
  EXPECT_EQ(via_recurrence({3, 2, 0, 0}), Poly(1));
  EXPECT_EQ(via_recurrence({1, 1, 2, 1}), P("z^2*w + 2*g*z"));
}

TEST(Genfun, Examples) {
  EXPECT_EQ(via_genfun({1, 1, 1, 1}, 2), P("z*w + g"));
  for (int p = 2; p <= 4; ++p) EXPECT_EQ(via_genfun({p, 1, 1, 0}, 1), P("z"));
  EXPECT_EQ(via_genfun({2, 1, 2, 1}, 3), P("z^2*w + 2*g"));
  EXPECT_THROW(via_genfun({1, 1, 2, 2}, 3), OutOfTruncation);
}

TEST(OriginValue, Examples) {
  EXPECT_EQ(origin_value({2, 1, 4, 2}), P("24*g^2"));
  EXPECT_TRUE(origin_value({1, 1, 2, 1}).is_zero());
  for (int n = 0; n <= 5; ++n) {
    Rational expected = (n % 2 ? Rational(-1) : Rational(1)) * factorial(2 * n) / factorial(n);
    EXPECT_EQ(gamma_to(origin_value({2, 0, 2 * n, 0}), Poly(-1)), Poly(expected));
  }
}

TEST(Hypergeom, Examples) {
  EXPECT_EQ(hypergeom_form({1, 1, 1, 1}), P("z*w + g"));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(hypergeom_form({1, 1, n, 0}), Poly::var(Var::z, n));
  EXPECT_EQ(hypergeom_form({2, 2, 2, 2}), P("z^2*w^2 + 4*g"));
  EXPECT_THROW(hypergeom_form({2, 0, 2, 0}), Unsupported);
  EXPECT_THROW(hypergeom_form({0, 1, 2, 0}), Unsupported);
}

TEST(Strategies, AgreeOnSmallGrid) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 1}, {2, 0}, {0, 3}})
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= 5; ++m) {
        FamilyParams fp{p, q, n, m};
        Poly h = explicit_sum(fp);
        EXPECT_EQ(operational(fp), h);
        EXPECT_EQ(via_creation(fp), h);
        EXPECT_EQ(via_recurrence(fp), h);
        EXPECT_EQ(via_genfun(fp, n + m), h);
        if (p >= 1 && q >= 1) {
          EXPECT_EQ(hypergeom_form(fp), h);
        }
      }
}

TEST(Symmetry, SwapVariablesAndIndices) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 0}, {1, 3}})
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= 5; ++m)
        EXPECT_EQ(explicit_sum({p, q, n, m}).swapped(Var::z, Var::w), explicit_sum({q, p, m, n}));
}

TEST(Strategy, NamesRoundTrip) {
  EXPECT_EQ(strategy_from_name("genfun"), Strategy::genfun);
  EXPECT_THROW(strategy_from_name("bogus"), InvalidParams);
}

}  // namespace
}  // namespace ghpq
