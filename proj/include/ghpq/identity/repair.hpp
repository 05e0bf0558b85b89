#pragma once

// Exhaustive searches over small families of index/coefficient repairs of a
// misprinted display. A candidate survives if it matches the oracle at every
// probe point; the documented corrected variant must be the survivor.

#include <array>
#include <string>
#include <vector>

#include "ghpq/family.hpp"
#include "ghpq/identity/checks.hpp"

namespace ghpq {

struct ProbePoint {
  int p, q, n, m;
};

/// Probe grid used by all searches: small, but with every index large
/// enough that the candidate sums have several nonzero terms.
inline const std::vector<ProbePoint>& default_probes() {
  static const std::vector<ProbePoint> probes = {{1, 1, 2, 1}, {2, 1, 4, 2}, {1, 2, 3, 4}};
  return probes;
}

template <class Form>
struct RepairCandidate {
  Form form;
  std::string description;
  int edits;  // distance from the printed display
};

template <class Form, class Rhs, class Target>
std::vector<RepairCandidate<Form>> surviving(const std::vector<RepairCandidate<Form>>& all,
                                             const std::vector<ProbePoint>& probes, Rhs rhs, Target target) {
  std::vector<RepairCandidate<Form>> out;
  for (const auto& cand : all) {
    bool ok = true;
    for (const auto& pt : probes) {
      idcheck::Ctx cx(pt.p, pt.q);
      if (rhs(cx, pt, cand.form) != target(pt)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

/// 8 candidates: binomial orientation, w-index, and a 1/k! factor.
inline std::vector<RepairCandidate<idcheck::ParamRecForm>> search_param_rec(
    const std::vector<ProbePoint>& probes = default_probes()) {
  std::vector<RepairCandidate<idcheck::ParamRecForm>> all;
  for (int mask = 0; mask < 8; ++mask) {
    idcheck::ParamRecForm f{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    std::string d = std::string(f.binom_k_over_j ? "C(k,j)" : "C(j,k)") + ", H_{n-j-pk," +
                    (f.w_index_qk ? "m-qk}" : "m-k}") + (f.inv_k_factorial ? ", 1/k!" : "");
    all.push_back({f, d, __builtin_popcount(static_cast<unsigned>(mask))});
  }
  return surviving(
      all, probes, [](const idcheck::Ctx& cx, const ProbePoint& pt, const idcheck::ParamRecForm& f) {
        return idcheck::param_rec_rhs(cx, pt.n, pt.m, f);
      },
      [](const ProbePoint& pt) { return gh_or_zero(pt.p + 1, pt.q, pt.n, pt.m); });
}

/// 5^4 operators L = c11 d_z d_w + c10 d_z + c01 d_w + c00 with c in {-2..2}.
inline std::vector<RepairCandidate<idcheck::PqOperator>> search_param_op_pq(
    const std::vector<ProbePoint>& probes = default_probes()) {
  std::vector<RepairCandidate<idcheck::PqOperator>> all;
  const auto& pr = idcheck::kParamOpPqPrinted;
  for (int c11 = -2; c11 <= 2; ++c11)
    for (int c10 = -2; c10 <= 2; ++c10)
      for (int c01 = -2; c01 <= 2; ++c01)
        for (int c00 = -2; c00 <= 2; ++c00) {
          idcheck::PqOperator L{c11, c10, c01, c00};
          std::string d = std::to_string(c11) + " d_z d_w + " + std::to_string(c10) + " d_z + " +
                          std::to_string(c01) + " d_w + " + std::to_string(c00);
          int edits = (c11 != pr.c11) + (c10 != pr.c10) + (c01 != pr.c01) + (c00 != pr.c00);
          all.push_back({L, d, edits});
        }
  return surviving(
      all, probes, [](const idcheck::Ctx& cx, const ProbePoint& pt, const idcheck::PqOperator& L) {
        return idcheck::param_op_pq_rhs(cx, pt.n, pt.m, L);
      },
      [](const ProbePoint& pt) { return gh_or_zero(pt.p + 1, pt.q + 1, pt.n, pt.m); });
}

/// 16 candidates: which inner index pairs with each outer one, in the
/// polynomial indices and in the denominators.
inline std::vector<RepairCandidate<idcheck::ConnForm>> search_conn_pq_from_gh(
    const std::vector<ProbePoint>& probes = default_probes()) {
  std::vector<RepairCandidate<idcheck::ConnForm>> all;
  for (int mask = 0; mask < 16; ++mask) {
    idcheck::ConnForm f{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
    std::string d = std::string("H^{(p)}_{n-p(") + (f.z_index_i ? "i" : "l") + "+k)}, H^{(q)}_{m-q(" +
                    (f.w_index_l ? "l" : "i") + "+j)}, 1/(" + (f.den_k_i ? "k-i" : "k-l") + ")!(" +
                    (f.den_j_l ? "j-l" : "j-i") + ")!";
    all.push_back({f, d, f.edits()});
  }
  return surviving(
      all, probes, [](const idcheck::Ctx& cx, const ProbePoint& pt, const idcheck::ConnForm& f) {
        return idcheck::conn_pq_from_gh_rhs(cx, pt.n, pt.m, f);
      },
      [](const ProbePoint& pt) { return gh_or_zero(pt.p, pt.q, pt.n, pt.m); });
}

/// The survivor with the fewest edits, or nullptr when none survived.
template <class Form>
const RepairCandidate<Form>* minimal_repair(const std::vector<RepairCandidate<Form>>& survivors) {
  const RepairCandidate<Form>* best = nullptr;
  for (const auto& c : survivors)
    if (!best || c.edits < best->edits) best = &c;
  return best;
}

}  // namespace ghpq
