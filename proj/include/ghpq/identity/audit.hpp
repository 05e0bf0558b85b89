#pragma once

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ghpq/identity/catalog.hpp"
#include "ghpq/identity/checks.hpp"
#include "ghpq/identity/report.hpp"

namespace ghpq {

enum class VariantPolicy { printed, corrected, both };

inline VariantPolicy policy_from_name(std::string_view s) {
  if (s == "printed") return VariantPolicy::printed;
  if (s == "corrected") return VariantPolicy::corrected;
  if (s == "both") return VariantPolicy::both;
  throw InvalidParams("unknown variant policy '" + std::string(s) + "'");
}

struct AuditConfig {
  std::vector<Tag> tags;
  int n_max = 6;
  int m_max = 6;
  std::vector<std::pair<int, int>> pq = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  int order = 10;
  int prime_max = 3;  // n', m'
  int jk_max = 3;     // j, k
  VariantPolicy policy = VariantPolicy::both;
  unsigned jobs = 1;
};

inline std::vector<Tag> all_tags() {
  std::vector<Tag> out;
  for (const auto& e : kCatalog) out.push_back(e.tag);
  return out;
}

struct AuditCell {
  Tag tag;
  IdentityParams params;
};

struct RationalSample {
  Rational a, b, z, w, gamma;
};

/// Parameter sets for the (a)_n (b)_m generating function; a, b are never integers.
inline const std::vector<RationalSample>& rational_samples() {
  static const std::vector<RationalSample> s = {
      {Rational(1, 2), Rational(1, 3), Rational(2), Rational(3), Rational(5)},
      {Rational(-3, 2), Rational(5, 4), Rational(-1), Rational(1, 2), Rational(2, 3)},
      {Rational(7, 3), Rational(-1, 5), Rational(1, 3), Rational(-2), Rational(-3, 4)},
  };
  return s;
}

inline std::vector<AuditCell> enumerate_cells(const AuditConfig& cfg) {
  std::vector<AuditCell> cells;
  for (Tag tag : cfg.tags) {
    const TagInfo& ti = info(tag);
    auto pq_ok = [&](int p, int q) { return !ti.needs_positive_orders || (p >= 1 && q >= 1); };
    auto add = [&](IdentityParams ip) { cells.push_back({tag, std::move(ip)}); };
    auto base = [](int p, int q) {
      IdentityParams ip;
      ip.p = p;
      ip.q = q;
      return ip;
    };
    switch (ti.shape) {
      case Shape::family:
      case Shape::family_n2:
      case Shape::family_m2:
      case Shape::family_n2m2:
      case Shape::family_jk:
      case Shape::family_k: {
        const bool uses_n2 = ti.shape == Shape::family_n2 || ti.shape == Shape::family_n2m2;
        const bool uses_m2 = ti.shape == Shape::family_m2 || ti.shape == Shape::family_n2m2;
        const bool uses_j = ti.shape == Shape::family_jk;
        const bool uses_k = ti.shape == Shape::family_jk || ti.shape == Shape::family_k;
        for (auto [p, q] : cfg.pq) {
          if (!pq_ok(p, q)) continue;
          for (int n = 0; n <= cfg.n_max; ++n)
            for (int m = 0; m <= cfg.m_max; ++m)
              for (int n2 = 0; n2 <= (uses_n2 ? cfg.prime_max : 0); ++n2)
                for (int m2 = 0; m2 <= (uses_m2 ? cfg.prime_max : 0); ++m2)
                  for (int j = 0; j <= (uses_j ? cfg.jk_max : 0); ++j)
                    for (int k = 0; k <= (uses_k ? cfg.jk_max : 0); ++k) {
                      IdentityParams ip = base(p, q);
                      ip.n = n;
                      ip.m = m;
                      if (uses_n2) ip.n2 = n2;
                      if (uses_m2) ip.m2 = m2;
                      if (uses_j) ip.j = j;
                      if (uses_k) ip.k = k;
                      add(ip);
                    }
        }
        break;
      }
      case Shape::one_d: {
        std::set<int> orders;
        for (auto [p, q] : cfg.pq) {
          if (p >= 1) orders.insert(p);
          if (q >= 1) orders.insert(q);
        }
        for (int p : orders)
          for (int n = 0; n <= cfg.n_max; ++n) {
            IdentityParams ip = base(p, 0);
            ip.has_q = false;
            ip.n = n;
            add(ip);
          }
        break;
      }
      case Shape::per_n:
        for (auto [p, q] : cfg.pq) {
          if (!pq_ok(p, q)) continue;
          for (int n = 0; n <= cfg.n_max; ++n) {
            IdentityParams ip = base(p, q);
            ip.n = n;
            add(ip);
          }
        }
        break;
      case Shape::ito:
        for (int n = 0; n <= cfg.n_max; ++n) {
          IdentityParams ip = base(1, 1);
          ip.n = n;
          add(ip);
        }
        break;
      case Shape::per_pq:
        for (auto [p, q] : cfg.pq)
          if (pq_ok(p, q)) add(base(p, q));
        break;
      case Shape::series:
        for (auto [p, q] : cfg.pq) {
          if (!pq_ok(p, q)) continue;
          IdentityParams ip = base(p, q);
          ip.order = cfg.order;
          add(ip);
        }
        break;
      case Shape::series_jk:
        for (auto [p, q] : cfg.pq) {
          if (!pq_ok(p, q)) continue;
          for (int j = 1; j <= cfg.jk_max; ++j)
            for (int k = 1; k <= cfg.jk_max; ++k) {
              IdentityParams ip = base(p, q);
              ip.j = j;
              ip.k = k;
              ip.order = cfg.order;
              add(ip);
            }
        }
        break;
      case Shape::series_rational:
        for (auto [p, q] : cfg.pq) {
          if (!pq_ok(p, q)) continue;
          for (const auto& s : rational_samples()) {
            IdentityParams ip = base(p, q);
            ip.a = s.a;
            ip.b = s.b;
            ip.z = s.z;
            ip.w = s.w;
            ip.gamma = s.gamma;
            ip.order = cfg.order;
            add(ip);
          }
        }
        break;
      case Shape::transform:
        for (int n = 0; n <= cfg.n_max; ++n)
          for (int m = 0; m <= cfg.m_max; ++m)
            for (const Rational& x : {Rational(2), Rational(-3), Rational(1, 2)}) {
              IdentityParams ip = base(0, 0);
              ip.has_p = ip.has_q = false;
              ip.n = n;
              ip.m = m;
              ip.x = x;
              add(ip);
            }
        break;
    }
  }
  return cells;
}

/// Outcome of one grid cell under a variant policy.
struct CellResult {
  std::vector<IdentityReport> reports;
  bool passed = false;
};

inline IdentityReport safe_verify(Tag tag, const IdentityParams& ip, bool corrected) {
  try {
    return verify_variant(tag, ip, corrected);
  } catch (const Error& e) {
    IdentityReport r;
    r.tag = tag;
    r.params = ip;
    r.variant = variant_label(tag, corrected);
    r.status = Status::Fail;
    r.notes = std::string("error: ") + e.what();
    return r;
  }
}

inline CellResult run_cell(const AuditCell& cell, VariantPolicy policy) {
  CellResult out;
  const bool ledger = in_ledger(cell.tag);
  if (policy == VariantPolicy::corrected && ledger) {
    out.reports.push_back(safe_verify(cell.tag, cell.params, true));
    out.passed = out.reports.back().passed();
    return out;
  }
  out.reports.push_back(safe_verify(cell.tag, cell.params, false));
  out.passed = out.reports.back().passed();
  if (policy == VariantPolicy::both && ledger) {
    out.reports.push_back(safe_verify(cell.tag, cell.params, true));
    out.passed = out.passed || out.reports.back().passed();
  }
  return out;
}

struct AuditSummary {
  long exact_pass = 0;
  long series_pass = 0;
  long fail = 0;
  long corrected_reports = 0;
  long cells = 0;
  long cell_failures = 0;
  std::vector<std::string> ledger_printed_failures;  // tags whose printed form failed somewhere
  std::vector<std::string> failing_tags;             // tags with a cell failing under the policy

  nlohmann::json to_json() const {
    return {{"cells", cells},
            {"cell_failures", cell_failures},
            {"reports", {{"ExactPass", exact_pass}, {"SeriesPass", series_pass}, {"Fail", fail}}},
            {"corrected_variant_reports", corrected_reports},
            {"printed_failures_in_ledger", ledger_printed_failures},
            {"failing_tags", failing_tags}};
  }
};

struct AuditResult {
  std::vector<IdentityReport> reports;
  AuditSummary summary;
};

/// Runs every cell; worker count never changes the output.
inline AuditResult audit_grid(const AuditConfig& cfg) {
  const std::vector<AuditCell> cells = enumerate_cells(cfg);
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) results[i] = run_cell(cells[i], cfg.policy);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cells.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  AuditResult out;
  std::set<std::string> printed_fail, failing;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    ++out.summary.cells;
    if (!results[i].passed) {
      ++out.summary.cell_failures;
      failing.insert(std::string(tag_name(cells[i].tag)));
    }
    for (auto& r : results[i].reports) {
      switch (r.status) {
        case Status::ExactPass: ++out.summary.exact_pass; break;
        case Status::SeriesPass: ++out.summary.series_pass; break;
        case Status::Fail: ++out.summary.fail; break;
      }
      if (r.corrected()) ++out.summary.corrected_reports;
      if (!r.corrected() && !r.passed() && in_ledger(r.tag)) printed_fail.insert(std::string(tag_name(r.tag)));
      out.reports.push_back(std::move(r));
    }
  }
  out.summary.ledger_printed_failures.assign(printed_fail.begin(), printed_fail.end());
  out.summary.failing_tags.assign(failing.begin(), failing.end());
  return out;
}

}  // namespace ghpq
