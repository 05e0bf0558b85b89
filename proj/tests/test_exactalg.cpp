#include <gtest/gtest.h>

#include <random>

#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"
#include "ghpq/series.hpp"
#include "support.hpp"

namespace ghpq {
namespace {

using testing::P;
using testing::random_poly;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -4);
  EXPECT_EQ(r.num_str(), "-3");
  EXPECT_EQ(r.den_str(), "2");
  EXPECT_THROW(Rational::parse("10/-5"), ParseError);
  EXPECT_EQ(Rational(10, -5).str(), "-2");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_EQ(Rational::parse("-12/18").str(), "-2/3");
}

TEST(Rational, Pochhammer) {
  EXPECT_EQ(rising(Rational(1, 2), 2), Rational(3, 4));
  EXPECT_EQ(rising(Rational(-2), 3), Rational(0));
  EXPECT_EQ(rising(Rational(5), 0), Rational(1));
  EXPECT_EQ(binomial(3, 5), Rational(0));
  EXPECT_EQ(inv_factorial(-1), Rational(0));
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(P("z + 1") + P("-1"), P("z"));
  EXPECT_EQ(Poly{} + P("z*w - 3"), P("z*w - 3"));
  EXPECT_EQ(P("z*w + g") + P("z*w - g"), P("2*z*w"));
  EXPECT_TRUE((P("z + 1") - P("z + 1")).is_zero());
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(P("(z + w)") * P("(z - w)"), P("z^2 - w^2"));
  EXPECT_EQ(P("z^3*g - 1/2") * Poly(1), P("z^3*g - 1/2"));
  EXPECT_EQ(P("z*w + g") * P("z*w + g"), P("z^2*w^2 + 2*g*z*w + g^2"));
}

TEST(PolyDiff, Examples) {
  EXPECT_EQ(P("z^2*w").diff(Var::z), P("2*z*w"));
  EXPECT_TRUE(P("z^2*w").diff(Var::z, 3).is_zero());
  EXPECT_EQ(P("z^2*w + 2*g*z").diff(Var::gamma), P("2*z"));
  EXPECT_EQ(P("z^2").diff(Var::z, 0), P("z^2"));
}

TEST(PolySubst, Examples) {
  EXPECT_EQ(P("z^2*w").subst({{Var::z, P("2*z")}}), P("4*z^2*w"));
  EXPECT_EQ(P("z*w + g").subst({{Var::z, P("z + zp")}, {Var::w, P("w + wp")}, {Var::gamma, P("g + gp")}}),
            P("z*w + z*wp + zp*w + zp*wp + g + gp"));
  EXPECT_EQ(P("z^2 + g").subst({{Var::gamma, Poly(-1)}}), P("z^2 - 1"));
  // Simultaneous, not sequential.
  EXPECT_EQ(P("z - w").subst({{Var::z, P("w")}, {Var::w, P("z")}}), P("w - z"));
}

TEST(PolyOrder, GradedLexDescending) {
  Poly p = P("g + z*wp + gp + zp*w + z*w + zp*wp");
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.terms()[0].mono, Monomial::of({{Var::z, 1}, {Var::w, 1}}));
  EXPECT_EQ(p.terms()[1].mono, Monomial::of({{Var::z, 1}, {Var::w_prime, 1}}));
  EXPECT_EQ(p.terms()[5].mono, Monomial::of({{Var::gamma_prime, 1}}));
}

TEST(PolyRing, RandomizedAxioms) {
  std::mt19937_64 rng(20240611);
  const std::vector<Var> vs = {Var::z, Var::w, Var::gamma};
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(rng, vs, 2, 6), b = random_poly(rng, vs, 2, 6), c = random_poly(rng, vs, 2, 6);
    EXPECT_TRUE(((a + b) + c - (a + (b + c))).is_zero());
    EXPECT_TRUE((a * (b + c) - (a * b + a * c)).is_zero());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.diff(Var::z).diff(Var::w), a.diff(Var::w).diff(Var::z));
    const Poly prod = a * b;
    for (const auto& t : prod.terms()) {
      EXPECT_FALSE(t.coeff.is_zero());
      EXPECT_TRUE(mpz_class(gcd(t.coeff.num(), t.coeff.den())) == 1);
      EXPECT_TRUE(t.coeff.den() > 0);
    }
  }
}

TEST(Series, ExpOfScalarSeries) {
  SeriesUV e = series_exp(SeriesUV::from_poly(P("z*u"), 2));
  EXPECT_EQ(e.to_poly(), P("1 + z*u + 1/2*z^2*u^2"));
  EXPECT_EQ(series_coeff(e, 1, 0), P("z"));
  EXPECT_TRUE(series_coeff(e, 0, 1).is_zero());
  EXPECT_THROW(series_coeff(e, 2, 1), OutOfTruncation);
  EXPECT_EQ(series_exp(SeriesUV(3)).to_poly(), Poly(1));
}

TEST(Series, ExpOfGeneratingExponent) {
  SeriesUV e = series_exp(SeriesUV::from_poly(P("z*u + w*v + g*u*v"), 2));
  EXPECT_EQ(e.to_poly(), P("1 + z*u + w*v + 1/2*z^2*u^2 + (z*w + g)*u*v + 1/2*w^2*v^2"));
  EXPECT_EQ(series_coeff(e, 1, 1), P("z*w + g"));
}

TEST(Series, ExpRejectsConstantTerm) {
  EXPECT_THROW(series_exp(SeriesUV::from_poly(P("1 + u"), 3)), DomainError);
}

TEST(Series, ExpAdditivity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    Poly a = random_poly(rng, {Var::z, Var::u, Var::v}, 2, 4) * P("u");
    Poly b = random_poly(rng, {Var::w, Var::u, Var::v}, 2, 4) * P("v");
    SeriesUV sa = SeriesUV::from_poly(a, 5), sb = SeriesUV::from_poly(b, 5);
    EXPECT_EQ(series_exp(sa) * series_exp(sb), series_exp(sa + sb));
  }
}

TEST(Series, BinomialNegative) {
  EXPECT_EQ(series_binomial_neg(P("u*z"), Rational(1), 2).to_poly(), P("1 + u*z + u^2*z^2"));
  EXPECT_EQ(series_binomial_neg(P("u*z"), Rational(0), 2).to_poly(), Poly(1));
  EXPECT_EQ(series_binomial_neg(P("u*z"), Rational(1, 2), 2).to_poly(), P("1 + 1/2*u*z + 3/8*u^2*z^2"));
}

TEST(Series, BinomialTimesInverseIsOne) {
  SeriesUV s = series_binomial_neg(P("u*z + v*w"), Rational(3, 7), 6);
  SeriesUV t = series_binomial_neg(P("u*z + v*w"), Rational(-3, 7), 6);
  EXPECT_EQ((s * t).to_poly(), Poly(1));
}

TEST(Series, ProductStaysTruncated) {
  SeriesUV s = SeriesUV::from_poly(P("1 + u + v^3"), 3);
  SeriesUV sq = s * s;
  EXPECT_EQ(sq.order(), 3);
  EXPECT_EQ(sq.to_poly(), P("1 + 2*u + u^2 + 2*v^3"));
}

TEST(Series, Derivative) {
  SeriesUV s = SeriesUV::from_poly(P("u^3*v + 2*u*v^2 + z*u"), 4);
  EXPECT_EQ(s.derivative(1, 0).to_poly(), P("3*u^2*v + 2*v^2 + z"));
  EXPECT_EQ(s.derivative(1, 1).order(), 2);
}

}  // namespace
}  // namespace ghpq
