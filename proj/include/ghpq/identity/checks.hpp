#pragma once

// Both sides of every catalogued identity, expanded exactly. The printed
// form is reproduced as displayed; for misprinted displays a corrected
// variant is available next to it. Nothing here decides pass or fail.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ghpq/errors.hpp"
#include "ghpq/family.hpp"
#include "ghpq/identity/catalog.hpp"
#include "ghpq/identity/report.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/series.hpp"

namespace ghpq {

/// P_k^n(z) = Σ_{j<k} (-1)^{k-j} (-n)_{k-j} C(k,j) z^j, with P_0^n = 0.
inline Poly pochhammer_tail(int n, int k) {
  if (k < 0) throw InvalidParams("pochhammer_tail needs k >= 0");
  Poly out;
  for (int j = 0; j < k; ++j) {
    Rational c = ((k - j) % 2 ? Rational(-1) : Rational(1)) * rising(Rational(-n), k - j) * binomial(k, j);
    out += Poly::var(Var::z, j).scaled(c);
  }
  return out;
}

namespace idcheck {

using Eqs = std::vector<Equation>;

inline Poly X(Var v, int k = 1) { return Poly::var(v, k); }

inline Rational two_pow(int e) { return Rational(2).pow(e); }

/// Σ_k c^k/k! op^k(f); op must lower the (z, w)-degree.
inline Poly exp_operator(const Poly& f, const Poly& c, const std::function<Poly(const Poly&)>& op) {
  Poly sum = f, term = f;
  for (int k = 1; k < 4096; ++k) {
    term = (op(term) * c).scaled(Rational(1, k));
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw DomainError("exponential operator did not terminate");
}

/// Everything one grid cell needs: the family at fixed (p, q) and the
/// standard ring variables.
struct Ctx {
  int p, q;
  Poly z = X(Var::z), w = X(Var::w), g = X(Var::gamma);
  Poly zp = X(Var::z_prime), wp = X(Var::w_prime), gp = X(Var::gamma_prime);
  Poly t = X(Var::t), a = X(Var::a), b = X(Var::b), c = X(Var::c);
  Poly u = X(Var::u), v = X(Var::v), r = X(Var::r);

  Ctx(int p_, int q_) : p(p_), q(q_) {}

  Poly H(int n, int m) const { return gh_or_zero(p, q, n, m); }
  Poly H(int n, int m, const Poly& zz, const Poly& ww, const Poly& gg) const { return at(H(n, m), zz, ww, gg); }
  Poly D(const Poly& f) const { return f.diff(Var::z, p).diff(Var::w, q); }
  int k_max(int n, int m) const { return FamilyParams{p, q, n, m}.k_max(); }

  // z + c p γ ∂_z^{p-1} ∂_w^q, and its w-analogue; c = 1 gives the raising operators.
  Poly raise_z(const Poly& f, const Rational& scale) const {
    return z * f + (g * f.diff(Var::z, p - 1).diff(Var::w, q)).scaled(scale);
  }
  Poly raise_w(const Poly& f, const Rational& scale) const {
    return w * f + (g * f.diff(Var::z, p).diff(Var::w, q - 1)).scaled(scale);
  }
};

// t^{deg} f(z/t, w/t), with every (z, w)-degree at most deg.
inline Poly homogenize(const Poly& f, int deg) {
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    Monomial m = term.mono;
    m.set(Var::t, deg - m.exp(Var::z) - m.exp(Var::w));
    out.push_back({m, term.coeff});
  }
  return Poly::from_terms(std::move(out));
}

// Reduces powers of r modulo r^{2L} = 2.
inline Poly reduce_root_of_two(const Poly& f, int two_l) {
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    Monomial m = term.mono;
    int e = m.exp(Var::r);
    m.set(Var::r, e % two_l);
    out.push_back({m, term.coeff * two_pow(e / two_l)});
  }
  return Poly::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Variant descriptions shared with the repair searches.

struct ParamRecForm {
  bool binom_k_over_j;  // C(k,j) rather than C(j,k)
  bool w_index_qk;      // H_{.., m-qk} rather than H_{.., m-k}
  bool inv_k_factorial;
};
inline constexpr ParamRecForm kParamRecPrinted{false, false, false};
inline constexpr ParamRecForm kParamRecCorrected{true, true, true};

inline Poly param_rec_rhs(const Ctx& cx, int n, int m, const ParamRecForm& f) {
  Poly sum;
  const int kmax = cx.k_max(n, m);
  for (int k = 0; k <= kmax; ++k)
    for (int j = 0; j <= k; ++j) {
      Rational coef = f.binom_k_over_j ? binomial(k, j) : binomial(j, k);
      if (coef.is_zero()) continue;
      if ((k - j) % 2) coef = -coef;
      if (f.inv_k_factorial) coef *= inv_factorial(k);
      coef *= inv_factorial(n - j - cx.p * k) * inv_factorial(m - cx.q * k);
      if (coef.is_zero()) continue;
      int wi = f.w_index_qk ? m - cx.q * k : m - k;
      sum += (cx.g.pow(k) * cx.H(n - j - cx.p * k, wi)).scaled(coef);
    }
  return sum.scaled(factorial(n) * factorial(m));
}

/// exp(γ L ∂_z^p ∂_w^q) with L = c11 ∂_z∂_w + c10 ∂_z + c01 ∂_w + c00.
struct PqOperator {
  int c11, c10, c01, c00;
};
inline constexpr PqOperator kParamOpPqPrinted{0, 1, 1, -2};
inline constexpr PqOperator kParamOpPqCorrected{1, 0, 0, -1};

inline Poly param_op_pq_rhs(const Ctx& cx, int n, int m, const PqOperator& L) {
  auto op = [&](const Poly& f) {
    Poly d = cx.D(f);
    Poly out;
    if (L.c11) out += d.diff(Var::z).diff(Var::w).scaled(L.c11);
    if (L.c10) out += d.diff(Var::z).scaled(L.c10);
    if (L.c01) out += d.diff(Var::w).scaled(L.c01);
    if (L.c00) out += d.scaled(L.c00);
    return out;
  };
  return exp_operator(cx.H(n, m), cx.g, op);
}

struct ConnForm {
  bool z_index_i;  // H^{(p)}_{n-p(i+k)} rather than H^{(p)}_{n-p(l+k)}
  bool w_index_l;  // H^{(q)}_{m-q(l+j)} rather than H^{(q)}_{m-q(i+j)}
  bool den_k_i;    // (k-i)! rather than (k-l)!
  bool den_j_l;    // (j-l)! rather than (j-i)!
  int edits() const { return z_index_i + w_index_l + den_k_i + den_j_l; }
};
inline constexpr ConnForm kConnPrinted{false, false, false, false};
inline constexpr ConnForm kConnCorrected{false, false, true, true};

inline Poly conn_pq_from_gh_rhs(const Ctx& cx, int n, int m, const ConnForm& f) {
  const int p = cx.p, q = cx.q;
  std::vector<Poly> gz(n + 1), gw(m + 1);
  for (int i = 0; i <= n; ++i) gz[i] = gould_hopper_1d(i, p).scaled(inv_factorial(i));
  for (int i = 0; i <= m; ++i) gw[i] = gould_hopper_1d(i, q).subst({{Var::z, cx.w}}).scaled(inv_factorial(i));
  auto at_z = [&](int idx) { return idx < 0 ? Poly{} : gz[idx]; };
  auto at_w = [&](int idx) { return idx < 0 ? Poly{} : gw[idx]; };
  Poly sum;
  for (int k = 0; k <= n / p; ++k)
    for (int j = 0; j <= m / q; ++j)
      for (int l = 0; l <= (n - p * k) / p; ++l)
        for (int i = 0; i <= (m - q * j) / q; ++i) {
          Rational coef = inv_factorial(l) * inv_factorial(i) * inv_factorial(f.den_k_i ? k - i : k - l) *
                          inv_factorial(f.den_j_l ? j - l : j - i);
          if (coef.is_zero()) continue;
          coef *= Rational(-2).pow(-(l + i));
          if ((k + j) % 2) coef = -coef;
          Poly zf = at_z(n - p * ((f.z_index_i ? i : l) + k));
          Poly wf = at_w(m - q * ((f.w_index_l ? l : i) + j));
          if (zf.is_zero() || wf.is_zero()) continue;
          sum += (cx.g.pow(k + j) * zf * wf).scaled(coef);
        }
  return sum.scaled(factorial(n) * factorial(m));
}

// ---------------------------------------------------------------------------

inline Eqs family_equations(Tag tag, const IdentityParams& ip, bool corrected) {
  const Ctx cx(ip.p, ip.q);
  const int p = ip.p, q = ip.q;
  const int n = IdentityParams::need(ip.n, "n"), m = IdentityParams::need(ip.m, "m");
  const Poly& z = cx.z;
  const Poly& w = cx.w;
  const Poly& g = cx.g;
  const Poly h = cx.H(n, m);
  const Poly mono = X(Var::z, n) * X(Var::w, m);
  const int kmax = cx.k_max(n, m);
  const Rational nm_fact = factorial(n) * factorial(m);
  Eqs eqs;
  auto eq = [&](std::string label, Poly lhs, Poly rhs) { eqs.push_back({std::move(label), std::move(lhs), std::move(rhs)}); };

  switch (tag) {
    case Tag::SYMMETRY:
      eq("swap", h, explicit_sum({q, p, m, n}).swapped(Var::z, Var::w));
      break;

    case Tag::HYPERGEOM:
      eq("hypergeometric sum", h, hypergeom_form({p, q, n, m}));
      break;

    case Tag::ORIGIN_VALUE: {
      const Poly h00 = at(h, Poly(0), Poly(0), g);
      if (p >= 1 && q >= 1) {
        if (n % p == 0 && m % q == 0) {
          int kn = n / p, km = m / q;
          Poly rhs;
          if (kn == km)
            rhs = g.pow(kn).scaled(corrected ? nm_fact * inv_factorial(kn) : factorial(n) * inv_factorial(kn));
          eq("H(0,0)", h00, rhs);
        }
        if (n % p != 0) eq("H(0,w) when p does not divide n", h.subst({{Var::z, Poly(0)}}), Poly{});
        if (m % q != 0) eq("H(z,0) when q does not divide m", h.subst({{Var::w, Poly(0)}}), Poly{});
      } else if (p == 0 && n == 0) {
        eq("H(0,0) at p = n = 0", h00, m % q == 0 ? g.pow(m / q).scaled(factorial(m) * inv_factorial(m / q)) : Poly{});
      } else if (q == 0 && m == 0) {
        eq("H(0,0) at q = m = 0", h00, n % p == 0 ? g.pow(n / p).scaled(factorial(n) * inv_factorial(n / p)) : Poly{});
      }
      break;
    }

    case Tag::MONOMIAL_RECOVERY:
      eq("gamma = 0", at(h, z, w, Poly(0)), mono);
      if (n < p && m < q) eq("n < p and m < q", h, mono);
      break;

    case Tag::HOMOGENEITY:
      eq("scaling", h * cx.a.pow(n) * cx.b.pow(m), at(h, cx.a * z, cx.b * w, g * cx.a.pow(p) * cx.b.pow(q)));
      break;

    case Tag::LIMIT: {
      Poly scaled_args = homogenize(h, n + m);
      eq("t^{n+m} H(z/t, w/t | gamma)", scaled_args, at(h, z, w, g * cx.t.pow(p + q)));
      eq("t -> 0", scaled_args.coefficient_of(Var::t, 0), mono);
      break;
    }

    case Tag::RUNGE_GENERAL: {
      Poly rhs;
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= m; ++j)
          rhs += (cx.H(k, j) * cx.H(n - k, m - j, cx.zp, cx.wp, cx.gp)).scaled(binomial(n, k) * binomial(m, j));
      eq("Runge", at(h, z + cx.zp, w + cx.wp, g + cx.gp), rhs);
      break;
    }

    case Tag::RUNGE_CANCEL: {
      const Poly hz = z.scaled(Rational(1, 2)), hw = w.scaled(Rational(1, 2));
      Poly lhs;
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= m; ++j)
          lhs += (cx.H(k, j, hz, hw, g) * cx.H(n - k, m - j, hz, hw, -g)).scaled(binomial(n, k) * binomial(m, j));
      eq("cancellation", lhs, mono);
      break;
    }

    case Tag::RUNGE_HALF: {
      const Poly gs = g.scaled(two_pow(p + q - 1));
      Poly rhs;
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= m; ++j)
          rhs += (cx.H(k, j, z, w, gs) * cx.H(n - k, m - j, z, w, gs)).scaled(binomial(n, k) * binomial(m, j));
      if (corrected) rhs = rhs.scaled(two_pow(-(n + m)));
      eq("halved Runge", h, rhs);
      break;
    }

    case Tag::RUNGE_SCALED: {
      // Exact in Q(r), r = 2^{1/(2L)}: 2^{1/(2p)} = r^{L/p}, 2^{1/(2q)} = r^{L/q}.
      const int L = std::lcm(p, q), two_l = 2 * L;
      auto r_inv = [&](int e) {  // r^{-e}
        int s = (e + two_l - 1) / two_l;
        return cx.r.pow(two_l * s - e).scaled(two_pow(-s));
      };
      Poly lhs = at(h, (z + cx.zp) * r_inv(L / p), (w + cx.wp) * r_inv(L / q), g);
      Poly sum;
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= m; ++j)
          sum += (cx.H(k, j) * cx.H(n - k, m - j, cx.zp, cx.wp, g)).scaled(binomial(n, k) * binomial(m, j));
      Poly rhs = sum * r_inv(n * (L / p) + m * (L / q));
      eq("scaled Runge in Q(2^{1/2L})", reduce_root_of_two(lhs, two_l), reduce_root_of_two(rhs, two_l));
      break;
    }

    case Tag::MULT_C: {
      Poly rhs;
      for (int k = 0; k <= kmax; ++k)
        rhs += ((cx.c - Poly(1)).pow(k) * g.pow(k) * cx.H(n - p * k, m - q * k))
                   .scaled(inv_factorial(k) * inv_factorial(n - p * k) * inv_factorial(m - q * k));
      eq("gamma -> c gamma", at(h, z, w, cx.c * g), rhs.scaled(nm_fact));
      break;
    }

    case Tag::MULT_ABC: {
      Poly rhs;
      const Poly ab = cx.a.pow(p) * cx.b.pow(q);
      for (int k = 0; k <= kmax; ++k)
        rhs += ((cx.c - ab).pow(k) * g.pow(k) * cx.a.pow(n - p * k) * cx.b.pow(m - q * k) *
                cx.H(n - p * k, m - q * k))
                   .scaled(inv_factorial(k) * inv_factorial(n - p * k) * inv_factorial(m - q * k));
      eq("(az, bw | c gamma)", at(h, cx.a * z, cx.b * w, cx.c * g), rhs.scaled(nm_fact));
      break;
    }

    case Tag::DERIV_Z:
      eq("d_z", h.diff(Var::z), cx.H(n - 1, m).scaled(n));
      break;
    case Tag::DERIV_W:
      eq("d_w", h.diff(Var::w), cx.H(n, m - 1).scaled(m));
      break;
    case Tag::DERIV_GAMMA:
      eq("d_gamma", h.diff(Var::gamma), cx.D(h));
      break;

    case Tag::DERIV_JK: {
      const int j = IdentityParams::need(ip.j, "j"), k = IdentityParams::need(ip.k, "k");
      Poly rhs;
      if (j <= n && k <= m)
        rhs = cx.H(n - j, m - k).scaled(nm_fact * inv_factorial(n - j) * inv_factorial(m - k));
      eq("d_z^j d_w^k", h.diff(Var::z, j).diff(Var::w, k), rhs);
      break;
    }

    case Tag::DERIV_GAMMA_K: {
      const int k = IdentityParams::need(ip.k, "k");
      Poly rhs;
      if (k <= kmax)
        rhs = cx.H(n - p * k, m - q * k).scaled(nm_fact * inv_factorial(n - p * k) * inv_factorial(m - q * k));
      eq("d_gamma^k", h.diff(Var::gamma, k), rhs);
      break;
    }

    case Tag::INVERSE_SUM: {
      Poly rhs;
      for (int k = 0; k <= kmax; ++k)
        rhs += ((-g).pow(k) * cx.H(n - p * k, m - q * k))
                   .scaled(inv_factorial(k) * inv_factorial(n - p * k) * inv_factorial(m - q * k));
      eq("monomial as a sum", mono, rhs.scaled(nm_fact));
      break;
    }

    case Tag::INVERSE_OP:
      eq("monomial by the inverse operator", mono, exp_operator(h, -g, [&](const Poly& f) { return cx.D(f); }));
      break;

    case Tag::REC_RAISE_N:
      eq("raise n",
         cx.H(n + 1, m),
         z * h + (g * cx.H(n + 1 - p, m - q)).scaled(factorial(p) * factorial(q) * binomial(n, p - 1) * binomial(m, q)));
      break;
    case Tag::REC_RAISE_N_OP:
      eq("raise n by operator", cx.H(n + 1, m), cx.raise_z(h, p));
      break;
    case Tag::REC_RAISE_M: {
      int wi = corrected ? m + 1 - q : m - 1 - q;
      eq("raise m",
         cx.H(n, m + 1),
         w * h + (g * cx.H(n - p, wi)).scaled(factorial(p) * factorial(q) * binomial(n, p) * binomial(m, q - 1)));
      break;
    }
    case Tag::REC_RAISE_M_OP:
      eq("raise m by operator", cx.H(n, m + 1), cx.raise_w(h, q));
      break;

    case Tag::CREATION: {
      if (p >= 1) {
        Poly f = X(Var::w, m);
        for (int i = 0; i < n; ++i) f = cx.raise_z(f, p);
        eq("z-creation on w^m", h, f);
      }
      if (q >= 1) {
        Poly f = X(Var::z, n);
        for (int i = 0; i < m; ++i) f = cx.raise_w(f, q);
        eq("w-creation on z^n", h, f);
      }
      break;
    }

    case Tag::CREATION_BOTH: {
      Poly f(1);
      for (int i = 0; i < m; ++i) f = cx.raise_w(f, q);
      for (int i = 0; i < n; ++i) f = cx.raise_z(f, p);
      eq("both creation operators on 1", h, f);
      break;
    }

    case Tag::PARAM_REC:
      eq("H^{(p+1,q)}", gh_or_zero(p + 1, q, n, m),
         param_rec_rhs(cx, n, m, corrected ? kParamRecCorrected : kParamRecPrinted));
      break;

    case Tag::PARAM_OP_P:
      eq("H^{(p+1,q)}", gh_or_zero(p + 1, q, n, m), exp_operator(h, g, [&](const Poly& f) {
           Poly d = cx.D(f);
           return d.diff(Var::z) - d;
         }));
      break;
    case Tag::PARAM_OP_Q:
      eq("H^{(p,q+1)}", gh_or_zero(p, q + 1, n, m), exp_operator(h, g, [&](const Poly& f) {
           Poly d = cx.D(f);
           return d.diff(Var::w) - d;
         }));
      break;
    case Tag::PARAM_OP_PQ:
      eq("H^{(p+1,q+1)}", gh_or_zero(p + 1, q + 1, n, m),
         param_op_pq_rhs(cx, n, m, corrected ? kParamOpPqCorrected : kParamOpPqPrinted));
      break;

    case Tag::NIELSEN_N: {
      const int n2 = IdentityParams::need(ip.n2, "n_prime");
      Poly rhs;
      const Poly dz = z - cx.zp;
      for (int s = 0; s <= n + n2; ++s) {
        Rational coef;
        for (int i = 0; i <= std::min(n, s); ++i) coef += binomial(n, i) * binomial(n2, s - i);
        if (coef.is_zero()) continue;
        rhs += (dz.pow(s) * cx.H(n + n2 - s, m, cx.zp, w, g)).scaled(coef);
      }
      eq("shift n", cx.H(n + n2, m), rhs);
      break;
    }
    case Tag::NIELSEN_M: {
      const int m2 = IdentityParams::need(ip.m2, "m_prime");
      Poly rhs;
      const Poly dw = w - cx.wp;
      for (int s = 0; s <= m + m2; ++s) {
        Rational coef;
        for (int k = 0; k <= std::min(m, s); ++k) coef += binomial(m, k) * binomial(m2, s - k);
        if (coef.is_zero()) continue;
        rhs += (dw.pow(s) * cx.H(n, m + m2 - s, z, cx.wp, g)).scaled(coef);
      }
      eq("shift m", cx.H(n, m + m2), rhs);
      break;
    }
    case Tag::NIELSEN_FULL: {
      const int n2 = IdentityParams::need(ip.n2, "n_prime"), m2 = IdentityParams::need(ip.m2, "m_prime");
      // The quadruple sum grouped by r = i + j and s = k + l.
      std::vector<Rational> cz(n + n2 + 1), cw(m + m2 + 1);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n2; ++j) cz[i + j] += binomial(n, i) * binomial(n2, j);
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= m2; ++l) cw[k + l] += binomial(m, k) * binomial(m2, l);
      const Poly dz = z - cx.zp, dw = w - cx.wp;
      Poly rhs;
      for (int r = 0; r <= n + n2; ++r)
        for (int s = 0; s <= m + m2; ++s)
          rhs += (dz.pow(r) * dw.pow(s) * cx.H(n + n2 - r, m + m2 - s, cx.zp, cx.wp, g)).scaled(cz[r] * cw[s]);
      eq("shift both", cx.H(n + n2, m + m2), rhs);
      break;
    }

    case Tag::ADD_ZW: {
      Poly rhs;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
          rhs += (z.pow(i) * w.pow(j) * cx.H(n - i, m - j, cx.zp, cx.wp, g)).scaled(binomial(n, i) * binomial(m, j));
      eq("addition", at(h, z + cx.zp, w + cx.wp, g), rhs);
      break;
    }
    case Tag::ADD_HALF: {
      const Poly gs = g.scaled(two_pow(corrected ? p + q : p + q - 1));
      Poly rhs;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
          rhs += (z.pow(i) * w.pow(j) * cx.H(n - i, m - j, z, w, gs)).scaled(binomial(n, i) * binomial(m, j));
      eq("halved addition", h, rhs.scaled(two_pow(corrected ? -(n + m) : n + m)));
      break;
    }

    case Tag::CONN_PQ_FROM_GH:
      eq("quadruple sum", h, conn_pq_from_gh_rhs(cx, n, m, corrected ? kConnCorrected : kConnPrinted));
      break;

    case Tag::PDE_HEAT:
      eq("heat", h.diff(Var::gamma), cx.D(h));
      break;
    case Tag::PDE_EIGEN_N:
      eq("eigenvalue n", z * h.diff(Var::z) + (g * cx.D(h)).scaled(corrected ? p : 1), h.scaled(n));
      break;
    case Tag::PDE_EIGEN_M:
      eq("eigenvalue m", w * h.diff(Var::w) + (g * cx.D(h)).scaled(corrected ? q : 1), h.scaled(m));
      break;
    case Tag::PDE_PRODUCT: {
      Poly f = h.diff(Var::z).diff(Var::w);
      f = cx.raise_w(f, corrected ? q : 1);
      f = cx.raise_z(f, corrected ? p : 1);
      eq("eigenvalue nm", f, h.scaled(n * m));
      break;
    }

    default:
      throw InvalidParams("tag " + std::string(tag_name(tag)) + " is not indexed by (p, q, n, m)");
  }
  return eqs;
}

inline Eqs one_d_equations(Tag tag, const IdentityParams& ip) {
  if (tag != Tag::MULT_GH) throw InvalidParams("not a one-variable tag");
  const int p = ip.p, n = IdentityParams::need(ip.n, "n");
  if (p < 1) throw Unsupported("MULT_GH needs p >= 1");
  const Poly z = X(Var::z), g = X(Var::gamma), a = X(Var::a), c = X(Var::c);
  const Poly lhs = gould_hopper_1d(n, p).subst({{Var::z, a * z}, {Var::gamma, c * g}});
  Poly rhs;
  for (int k = 0; k <= n / p; ++k)
    rhs += ((c - a.pow(p)).pow(k) * g.pow(k) * a.pow(n - p * k) * gould_hopper_1d(n - p * k, p))
               .scaled(inv_factorial(k) * inv_factorial(n - p * k));
  return {{"(az | c gamma)", lhs, rhs.scaled(factorial(n))}};
}

inline Eqs per_n_equations(Tag tag, const IdentityParams& ip, bool corrected) {
  const int n = IdentityParams::need(ip.n, "n");
  const Poly z = X(Var::z), w = X(Var::w), g = X(Var::gamma);
  Eqs eqs;
  switch (tag) {
    case Tag::CONN_GH_FROM_PQ: {
      const Ctx cx(ip.p, ip.q);
      Poly rhs;
      for (int k = 0; k <= n; ++k) rhs += cx.H(n - k, k, z - w, w, g).scaled(binomial(n, k));
      eqs.push_back({"H_n^{(p+q)}(z)", gould_hopper_1d(n, ip.p + ip.q), rhs});
      break;
    }
    case Tag::CONN_GH_SUM: {
      const Ctx cx(ip.p, ip.q);
      Poly rhs;
      for (int k = 0; k <= n; ++k) rhs += cx.H(n - k, k).scaled(binomial(n, k));
      eqs.push_back({"H_n^{(p+q)}(z+w)", gould_hopper_1d(n, ip.p + ip.q).subst({{Var::z, z + w}}), rhs});
      break;
    }
    case Tag::CONN_ITO: {
      // Ito-Hermite H_{a,b}(z, w) = H^{(1,1)}_{a,b}(z, w | -1); classical
      // H_n(x) = H_n^{(2)}(2x | -1).
      const Ctx cx(1, 1);
      Poly lhs;
      for (int k = 0; k <= n; ++k) lhs += cx.H(n - k, k, z - w, w, Poly(-1)).scaled(binomial(n, k));
      Poly rhs = gould_hopper_1d(n, 2).subst({{Var::z, corrected ? z : z.scaled(2)}, {Var::gamma, Poly(-1)}});
      eqs.push_back({corrected ? "H_n(z/2)" : "H_n(z)", lhs, rhs});
      break;
    }
    default:
      throw InvalidParams("tag " + std::string(tag_name(tag)) + " is not indexed by n alone");
  }
  return eqs;
}

inline Eqs per_pq_equations(Tag tag, const IdentityParams& ip, bool corrected) {
  if (tag != Tag::CORNER_VALUE) throw InvalidParams("not a per-(p,q) tag");
  const Ctx cx(ip.p, ip.q);
  const Poly h = cx.H(ip.p, ip.q);
  const Poly lhs = corrected ? h : at(h, cx.z, cx.w, Poly(0));
  return {{"H_{p,q}", lhs, cx.z.pow(ip.p) * cx.w.pow(ip.q) + cx.g.scaled(factorial(ip.p) * factorial(ip.q))}};
}

inline Eqs transform_equations(const IdentityParams& ip, bool corrected) {
  const int n = IdentityParams::need(ip.n, "n"), m = IdentityParams::need(ip.m, "m");
  const Rational& x = IdentityParams::need(ip.x, "x");
  if (x.is_zero()) throw DomainError("the 2F0 argument -1/x needs x != 0");
  const int lo = std::min(n, m), hi = std::max(n, m), d = hi - lo;
  Rational f20;
  for (int k = 0; k <= lo; ++k)
    f20 += rising(Rational(-n), k) * rising(Rational(-m), k) * inv_factorial(k) * (Rational(-1) / x).pow(k);
  Rational f11;
  for (int k = 0; k <= lo; ++k) f11 += rising(Rational(-lo), k) / (rising(Rational(d + 1), k) * factorial(k)) * x.pow(k);
  Rational pref = (corrected ? -x : x).pow(-lo) * factorial(hi) / factorial(d);
  return {{"2F0 vs 1F1", Poly(f20), Poly(pref * f11)}};
}

// ---------------------------------------------------------------------------
// Truncated-series identities. Both sides are returned as polynomials in
// u, v holding every coefficient of total order <= N.

inline Eqs series_equations(Tag tag, const IdentityParams& ip, bool corrected) {
  const int p = ip.p, q = ip.q;
  const int N = IdentityParams::need(ip.order, "order");
  if (N < p + q) throw InvalidParams("series order must be at least p + q");
  const Ctx cx(p, q);
  const Poly& z = cx.z;
  const Poly& w = cx.w;
  const Poly& g = cx.g;
  const Poly& u = cx.u;
  const Poly& v = cx.v;
  auto exponent = [&] { return z * u + w * v + g * u.pow(p) * v.pow(q); };
  Eqs eqs;

  switch (tag) {
    case Tag::GEN_FULL: {
      Poly lhs;
      for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m)
          lhs += (cx.H(n, m) * u.pow(n) * v.pow(m)).scaled(inv_factorial(n) * inv_factorial(m));
      eqs.push_back({"double series", lhs, series_exp(SeriesUV::from_poly(exponent(), N)).to_poly()});
      break;
    }
    case Tag::GEN_PARTIAL_U:
    case Tag::GEN_PARTIAL_V: {
      const bool in_u = tag == Tag::GEN_PARTIAL_U;
      const Poly& s = in_u ? u : v;
      const Poly e = series_exp(SeriesUV::from_poly(in_u ? z * u : w * v, N)).to_poly();
      for (int fixed = 0; fixed <= N; ++fixed) {
        Poly lhs;
        for (int i = 0; i <= N; ++i)
          lhs += (in_u ? cx.H(i, fixed) : cx.H(fixed, i)) * s.pow(i).scaled(inv_factorial(i));
        Poly gh = in_u ? gould_hopper_1d(fixed, q).subst({{Var::z, w}, {Var::gamma, u.pow(p) * g}})
                       : gould_hopper_1d(fixed, p).subst({{Var::gamma, v.pow(q) * g}});
        Poly rhs = (SeriesUV::from_poly(gh, N) * SeriesUV::from_poly(e, N)).to_poly();
        eqs.push_back({(in_u ? "m=" : "n=") + std::to_string(fixed), lhs, rhs});
      }
      break;
    }
    case Tag::GEN_POCHHAMMER_G: {
      const int j = IdentityParams::need(ip.j, "j"), k = IdentityParams::need(ip.k, "k");
      if (j < 1 || k < 1) throw Unsupported("GEN_POCHHAMMER_G needs j >= 1 and k >= 1");
      Poly lhs;
      for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m)
          lhs += (cx.H(n, m) * u.pow(n) * v.pow(m))
                     .scaled(rising(Rational(n), j) * rising(Rational(m), k) * inv_factorial(n) * inv_factorial(m));
      Poly rhs;
      if (corrected) {
        // (n)_j u^n = u d_u^j u^{n+j-1}.
        const int M = N + j + k;
        SeriesUV e = series_exp(SeriesUV::from_poly(exponent(), M));
        rhs = e.shifted(j - 1, k - 1).derivative(j, k).shifted(1, 1).to_poly();
      } else {
        const Poly uz = u * z, vw = v * w;
        Poly fz = uz.pow(j - 1) + pochhammer_tail(j, j - 1).subst({{Var::z, uz}});
        Poly fw = vw.pow(k - 1) + pochhammer_tail(k, k - 1).subst({{Var::z, vw}});
        SeriesUV e = series_exp(SeriesUV::from_poly(exponent(), N));
        rhs = (e * SeriesUV::from_poly(u * v * z * w * fz * fw, N)).to_poly();
      }
      eqs.push_back({"weighted by (n)_j (m)_k", lhs, rhs});
      break;
    }
    case Tag::GEN_POCHHAMMER_S: {
      if (p < 1 || q < 1) throw Unsupported("GEN_POCHHAMMER_S needs p, q >= 1");
      const Rational& a = IdentityParams::need(ip.a, "a");
      const Rational& b = IdentityParams::need(ip.b, "b");
      const Rational& z0 = IdentityParams::need(ip.z, "z");
      const Rational& w0 = IdentityParams::need(ip.w, "w");
      const Rational& g0 = IdentityParams::need(ip.gamma, "gamma");
      Poly lhs;
      for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m)
          lhs += (at(cx.H(n, m), Poly(z0), Poly(w0), Poly(g0)) * u.pow(n) * v.pow(m))
                     .scaled(rising(a, n) * rising(b, m) * inv_factorial(n) * inv_factorial(m));
      const Rational arg_scale = Rational(p).pow(p) * Rational(q).pow(q) * g0;
      SeriesUV rhs(N);
      for (int k = 0;; ++k) {
        Poly mono = corrected ? u.pow(p * k) * v.pow(q * k) : u.pow(k) * v.pow(k);
        if (mono.total_degree() > N) break;
        Rational coef = arg_scale.pow(k) * inv_factorial(k);
        for (int i = 1; i <= p; ++i) coef *= rising((a + Rational(i - 1)) / Rational(p), k);
        for (int i = 1; i <= q; ++i) coef *= rising((b + Rational(i - 1)) / Rational(q), k);
        if (coef.is_zero()) continue;
        rhs += SeriesUV::from_poly(mono.scaled(coef), N) *
               series_binomial_neg(u.scaled(z0), a + Rational(p * k), N) *
               series_binomial_neg(v.scaled(w0), b + Rational(q * k), N);
      }
      eqs.push_back({"weighted by (a)_n (b)_m", lhs, rhs.to_poly()});
      break;
    }
    default:
      throw InvalidParams("tag " + std::string(tag_name(tag)) + " is not a series identity");
  }
  return eqs;
}

}  // namespace idcheck

/// Both sides of `tag` at `params`, printed or corrected.
inline std::vector<Equation> identity_equations(Tag tag, const IdentityParams& params, bool corrected) {
  const TagInfo& ti = info(tag);
  if (corrected && !in_ledger(tag)) throw InvalidParams(std::string(ti.name) + " has no corrected variant");
  if (ti.needs_positive_orders && (params.p < 1 || params.q < 1))
    throw Unsupported(std::string(ti.name) + " needs p >= 1 and q >= 1");
  if (ti.shape != Shape::transform) FamilyParams{params.p, params.q, 0, 0}.validate();
  switch (ti.shape) {
    case Shape::family:
    case Shape::family_n2:
    case Shape::family_m2:
    case Shape::family_n2m2:
    case Shape::family_jk:
    case Shape::family_k:
      return idcheck::family_equations(tag, params, corrected);
    case Shape::one_d:
      return idcheck::one_d_equations(tag, params);
    case Shape::per_n:
    case Shape::ito:
      return idcheck::per_n_equations(tag, params, corrected);
    case Shape::per_pq:
      return idcheck::per_pq_equations(tag, params, corrected);
    case Shape::series:
    case Shape::series_jk:
    case Shape::series_rational:
      return idcheck::series_equations(tag, params, corrected);
    case Shape::transform:
      return idcheck::transform_equations(params, corrected);
  }
  throw InvalidParams("unknown tag shape");
}

inline std::string variant_label(Tag tag, bool corrected) {
  return corrected ? "corrected:" + std::string(info(tag).correction) : "printed";
}

/// Runs one variant of one identity and judges it.
inline IdentityReport verify_variant(Tag tag, const IdentityParams& params, bool corrected) {
  auto eqs = identity_equations(tag, params, corrected);
  std::optional<int> order;
  if (info(tag).kind == Kind::series) order = params.order;
  IdentityReport r = judge(tag, params, variant_label(tag, corrected), eqs, order);
  if (eqs.empty()) r.notes = "no statement applies at these parameters";
  if (tag == Tag::LIMIT && r.passed()) r.notes = "the proof's final '= 0' should read z^n w^m";
  return r;
}

}  // namespace ghpq
