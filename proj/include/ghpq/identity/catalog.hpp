#pragma once

// The identity catalog: one tag per identity, with the grid shape it is
// enumerated over and, for misprinted displays, the corrected variant.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ghpq/errors.hpp"

namespace ghpq {

enum class Tag {
  SYMMETRY,
  HYPERGEOM,
  HYP_2F0_1F1,
  ORIGIN_VALUE,
  CORNER_VALUE,
  MONOMIAL_RECOVERY,
  GEN_PARTIAL_U,
  GEN_PARTIAL_V,
  GEN_FULL,
  HOMOGENEITY,
  LIMIT,
  GEN_POCHHAMMER_G,
  GEN_POCHHAMMER_S,
  RUNGE_GENERAL,
  RUNGE_CANCEL,
  RUNGE_HALF,
  RUNGE_SCALED,
  MULT_C,
  MULT_ABC,
  MULT_GH,
  DERIV_Z,
  DERIV_W,
  DERIV_GAMMA,
  DERIV_JK,
  DERIV_GAMMA_K,
  INVERSE_SUM,
  INVERSE_OP,
  REC_RAISE_N,
  REC_RAISE_N_OP,
  REC_RAISE_M,
  REC_RAISE_M_OP,
  CREATION,
  CREATION_BOTH,
  PARAM_REC,
  PARAM_OP_P,
  PARAM_OP_Q,
  PARAM_OP_PQ,
  NIELSEN_N,
  NIELSEN_M,
  NIELSEN_FULL,
  ADD_ZW,
  ADD_HALF,
  CONN_GH_FROM_PQ,
  CONN_GH_SUM,
  CONN_ITO,
  CONN_PQ_FROM_GH,
  PDE_HEAT,
  PDE_EIGEN_N,
  PDE_EIGEN_M,
  PDE_PRODUCT,
};

/// How audit_grid enumerates a tag.
enum class Shape {
  family,        // (p, q, n, m)
  family_n2,     // + n'
  family_m2,     // + m'
  family_n2m2,   // + n', m'
  family_jk,     // + j, k (0..jk_max)
  family_k,      // + k (0..jk_max)
  one_d,         // (p, n) for each distinct order in the pq set
  per_n,         // (p, q, n)
  ito,           // (n) at p = q = 1
  per_pq,        // (p, q)
  series,        // (p, q, order)
  series_jk,     // (p, q, j, k, order), j, k >= 1
  series_rational,  // (p, q, a, b, z, w, gamma, order) for each sample set
  transform,     // (n, m, x)
};

enum class Kind { algebraic, series, transform, pde };

struct TagInfo {
  Tag tag;
  std::string_view name;
  std::string_view summary;
  Shape shape;
  Kind kind;
  bool needs_positive_orders;  // p >= 1 and q >= 1
  std::string_view correction;  // empty unless the printed display is misprinted
};

inline constexpr std::array<TagInfo, 50> kCatalog{{
    {Tag::SYMMETRY, "SYMMETRY", "H^{(p,q)}_{n,m}(z,w) = H^{(q,p)}_{m,n}(w,z)", Shape::family, Kind::algebraic, false, ""},
    {Tag::HYPERGEOM, "HYPERGEOM", "terminating (p+q)F0 representation", Shape::family, Kind::algebraic, true, ""},
    {Tag::HYP_2F0_1F1, "HYP_2F0_1F1", "terminating 2F0(-n,-m;;-1/x) as a 1F1", Shape::transform, Kind::transform,
     false, "prefactor (-x)^{-(n min m)} in place of x^{-(n min m)}"},
    {Tag::ORIGIN_VALUE, "ORIGIN_VALUE", "value at z = w = 0 and vanishing on the axes", Shape::family,
     Kind::algebraic, false, "origin value n!m! gamma^k/k! in place of n!/k! gamma^k"},
    {Tag::CORNER_VALUE, "CORNER_VALUE", "H_{p,q} = z^p w^q + gamma p! q!", Shape::per_pq, Kind::algebraic, false,
     "left side evaluated at gamma instead of 0"},
    {Tag::MONOMIAL_RECOVERY, "MONOMIAL_RECOVERY", "gamma = 0, or n < p and m < q, gives z^n w^m", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::GEN_PARTIAL_U, "GEN_PARTIAL_U", "sum_n H u^n/n! = H_m^{(q)}(w|u^p gamma) e^{zu}", Shape::series,
     Kind::series, true, ""},
    {Tag::GEN_PARTIAL_V, "GEN_PARTIAL_V", "sum_m H v^m/m! = H_n^{(p)}(z|v^q gamma) e^{wv}", Shape::series,
     Kind::series, true, ""},
    {Tag::GEN_FULL, "GEN_FULL", "sum H u^n v^m/(n!m!) = exp(zu + wv + gamma u^p v^q)", Shape::series, Kind::series,
     false, ""},
    {Tag::HOMOGENEITY, "HOMOGENEITY", "a^n b^m H(z,w|gamma) = H(az,bw|gamma a^p b^q)", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::LIMIT, "LIMIT", "t^{n+m} H(z/t,w/t|gamma) = H(z,w|t^{p+q} gamma) -> z^n w^m", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::GEN_POCHHAMMER_G, "GEN_POCHHAMMER_G", "generating function weighted by (n)_j (m)_k", Shape::series_jk,
     Kind::series, false, "closed form u v d_u^j d_v^k (u^{j-1} v^{k-1} exp(zu + wv + gamma u^p v^q))"},
    {Tag::GEN_POCHHAMMER_S, "GEN_POCHHAMMER_S", "generating function weighted by (a)_n (b)_m",
     Shape::series_rational, Kind::series, true, "hypergeometric argument carries u^p v^q in place of u v"},
    {Tag::RUNGE_GENERAL, "RUNGE_GENERAL", "Runge addition in z, w and gamma", Shape::family, Kind::algebraic, false,
     ""},
    {Tag::RUNGE_CANCEL, "RUNGE_CANCEL", "Runge convolution at (z/2, w/2 | +-gamma) gives z^n w^m", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::RUNGE_HALF, "RUNGE_HALF", "Runge convolution at doubled gamma", Shape::family, Kind::algebraic, false,
     "extra factor 2^{-(n+m)} on the right"},
    {Tag::RUNGE_SCALED, "RUNGE_SCALED", "Runge formula with arguments scaled by 2^{-1/(2p)}, 2^{-1/(2q)}",
     Shape::family, Kind::algebraic, true, ""},
    {Tag::MULT_C, "MULT_C", "multiplication formula in gamma -> c gamma", Shape::family, Kind::algebraic, false, ""},
    {Tag::MULT_ABC, "MULT_ABC", "multiplication formula for H(az, bw | c gamma)", Shape::family, Kind::algebraic,
     false, ""},
    {Tag::MULT_GH, "MULT_GH", "one-variable multiplication formula for H_n^{(p)}(az | c gamma)", Shape::one_d,
     Kind::algebraic, false, ""},
    {Tag::DERIV_Z, "DERIV_Z", "d_z H_{n,m} = n H_{n-1,m}", Shape::family, Kind::algebraic, false, ""},
    {Tag::DERIV_W, "DERIV_W", "d_w H_{n,m} = m H_{n,m-1}", Shape::family, Kind::algebraic, false, ""},
    {Tag::DERIV_GAMMA, "DERIV_GAMMA", "d_gamma H = d_z^p d_w^q H", Shape::family, Kind::algebraic, false, ""},
    {Tag::DERIV_JK, "DERIV_JK", "d_z^j d_w^k H_{n,m} as a shifted H", Shape::family_jk, Kind::algebraic, false, ""},
    {Tag::DERIV_GAMMA_K, "DERIV_GAMMA_K", "d_gamma^k H_{n,m} as a shifted H", Shape::family_k, Kind::algebraic, false,
     ""},
    {Tag::INVERSE_SUM, "INVERSE_SUM", "z^n w^m as a finite sum of H", Shape::family, Kind::algebraic, false, ""},
    {Tag::INVERSE_OP, "INVERSE_OP", "z^n w^m = exp(-gamma d_z^p d_w^q) H", Shape::family, Kind::algebraic, false, ""},
    {Tag::REC_RAISE_N, "REC_RAISE_N", "three-term raise in n", Shape::family, Kind::algebraic, true, ""},
    {Tag::REC_RAISE_N_OP, "REC_RAISE_N_OP", "H_{n+1,m} = (z + p gamma d_z^{p-1} d_w^q) H_{n,m}", Shape::family,
     Kind::algebraic, true, ""},
    {Tag::REC_RAISE_M, "REC_RAISE_M", "three-term raise in m", Shape::family, Kind::algebraic, true,
     "w-index m+1-q in place of m-1-q"},
    {Tag::REC_RAISE_M_OP, "REC_RAISE_M_OP", "H_{n,m+1} = (w + q gamma d_z^p d_w^{q-1}) H_{n,m}", Shape::family,
     Kind::algebraic, true, ""},
    {Tag::CREATION, "CREATION", "creation operator applied to a single monomial", Shape::family, Kind::algebraic,
     false, ""},
    {Tag::CREATION_BOTH, "CREATION_BOTH", "both creation operators applied to 1", Shape::family, Kind::algebraic,
     true, ""},
    {Tag::PARAM_REC, "PARAM_REC", "H^{(p+1,q)} as a double sum of H^{(p,q)}", Shape::family, Kind::algebraic, true,
     "binomial C(k,j), w-index m-qk and a 1/k! factor"},
    {Tag::PARAM_OP_P, "PARAM_OP_P", "H^{(p+1,q)} = exp(gamma (d_z - 1) d_z^p d_w^q) H^{(p,q)}", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::PARAM_OP_Q, "PARAM_OP_Q", "H^{(p,q+1)} = exp(gamma (d_w - 1) d_z^p d_w^q) H^{(p,q)}", Shape::family,
     Kind::algebraic, false, ""},
    {Tag::PARAM_OP_PQ, "PARAM_OP_PQ", "H^{(p+1,q+1)} as an exponential operator on H^{(p,q)}", Shape::family,
     Kind::algebraic, false, "operator (d_z d_w - 1) in place of (d_z + d_w - 2)"},
    {Tag::NIELSEN_N, "NIELSEN_N", "Nielsen sum shifting n by n'", Shape::family_n2, Kind::algebraic, false, ""},
    {Tag::NIELSEN_M, "NIELSEN_M", "Nielsen sum shifting m by m'", Shape::family_m2, Kind::algebraic, false, ""},
    {Tag::NIELSEN_FULL, "NIELSEN_FULL", "Nielsen sum shifting both indices", Shape::family_n2m2, Kind::algebraic,
     false, ""},
    {Tag::ADD_ZW, "ADD_ZW", "addition formula in z and w", Shape::family, Kind::algebraic, false, ""},
    {Tag::ADD_HALF, "ADD_HALF", "addition formula at halved arguments", Shape::family, Kind::algebraic, false,
     "factor 2^{-(n+m)} and gamma scaled by 2^{p+q}"},
    {Tag::CONN_GH_FROM_PQ, "CONN_GH_FROM_PQ", "H_n^{(p+q)}(z) as a binomial sum of H^{(p,q)}(z-w, w)",
     Shape::per_n, Kind::algebraic, false, ""},
    {Tag::CONN_GH_SUM, "CONN_GH_SUM", "H_n^{(p+q)}(z+w) as a binomial sum of H^{(p,q)}(z, w)", Shape::per_n,
     Kind::algebraic, false, ""},
    {Tag::CONN_ITO, "CONN_ITO", "Hermite H_n through Ito-Hermite polynomials", Shape::ito, Kind::algebraic, false,
     "the sum equals H_n(z/2), not H_n(z)"},
    {Tag::CONN_PQ_FROM_GH, "CONN_PQ_FROM_GH", "H^{(p,q)} as a quadruple sum of one-variable polynomials",
     Shape::family, Kind::algebraic, true, "denominators (k-i)!(j-l)! in place of (k-l)!(j-i)!"},
    {Tag::PDE_HEAT, "PDE_HEAT", "(d_gamma - d_z^p d_w^q) H = 0", Shape::family, Kind::pde, false, ""},
    {Tag::PDE_EIGEN_N, "PDE_EIGEN_N", "(z d_z + gamma d_z^p d_w^q) H = n H", Shape::family, Kind::pde, true,
     "operator z d_z + p gamma d_z^p d_w^q"},
    {Tag::PDE_EIGEN_M, "PDE_EIGEN_M", "(w d_w + gamma d_z^p d_w^q) H = m H", Shape::family, Kind::pde, true,
     "operator w d_w + q gamma d_z^p d_w^q"},
    {Tag::PDE_PRODUCT, "PDE_PRODUCT", "product operator with eigenvalue n m", Shape::family, Kind::pde, true,
     "factors p gamma and q gamma inside the two operators"},
}};

inline const TagInfo& info(Tag t) {
  const auto& e = kCatalog[static_cast<std::size_t>(t)];
  return e;
}

inline std::string_view tag_name(Tag t) { return info(t).name; }

inline bool in_ledger(Tag t) { return !info(t).correction.empty(); }

inline std::optional<Tag> tag_from_name(std::string_view s) {
  for (const auto& e : kCatalog)
    if (e.name == s) return e.tag;
  return std::nullopt;
}

}  // namespace ghpq
