#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "ghpq/errors.hpp"
#include "ghpq/identity/catalog.hpp"
#include "ghpq/io/format.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

/// Every free index or scalar an identity may quantify over. Unused fields
/// stay empty and are left out of reports.
struct IdentityParams {
  int p = 1;
  int q = 1;
  bool has_p = true, has_q = true;  // false where the identity does not involve that order
  std::optional<int> n, m;
  std::optional<int> n2, m2;  // n', m'
  std::optional<int> j, k;
  std::optional<Rational> a, b, x;
  std::optional<Rational> z, w, gamma;
  std::optional<int> order;

  static int need(const std::optional<int>& v, const char* name) {
    if (!v) throw InvalidParams(std::string("missing parameter '") + name + "'");
    if (*v < 0) throw InvalidParams(std::string("parameter '") + name + "' must be nonnegative");
    return *v;
  }
  static const Rational& need(const std::optional<Rational>& v, const char* name) {
    if (!v) throw InvalidParams(std::string("missing parameter '") + name + "'");
    return *v;
  }

  nlohmann::json to_json() const {
    nlohmann::json j_ = nlohmann::json::object();
    if (has_p) j_["p"] = p;
    if (has_q) j_["q"] = q;
    auto put_i = [&](const char* key, const std::optional<int>& v) {
      if (v) j_[key] = *v;
    };
    auto put_r = [&](const char* key, const std::optional<Rational>& v) {
      if (v) j_[key] = v->str();
    };
    put_i("n", n);
    put_i("m", m);
    put_i("n_prime", n2);
    put_i("m_prime", m2);
    put_i("j", j);
    put_i("k", k);
    put_r("a", a);
    put_r("b", b);
    put_r("x", x);
    put_r("z", z);
    put_r("w", w);
    put_r("gamma", gamma);
    put_i("order", order);
    return j_;
  }

  std::string str() const {
    std::string s;
    const nlohmann::json j_ = to_json();
    for (const auto& [key, val] : j_.items()) {
      if (!s.empty()) s += " ";
      s += key + "=" + (val.is_string() ? val.get<std::string>() : val.dump());
    }
    return s;
  }
};

/// One side-by-side comparison. Identities that hold for several
/// sub-statements produce several equations.
struct Equation {
  std::string label;
  Poly lhs;
  Poly rhs;
};

enum class Status { ExactPass, SeriesPass, Fail };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::ExactPass: return "ExactPass";
    case Status::SeriesPass: return "SeriesPass";
    case Status::Fail: return "Fail";
  }
  return "?";
}

struct IdentityReport {
  Tag tag{};
  IdentityParams params;
  std::string variant = "printed";
  Status status = Status::Fail;
  std::optional<int> series_order;
  Poly difference;
  std::string notes;

  bool passed() const { return status != Status::Fail; }
  bool corrected() const { return variant != "printed"; }

  std::string status_text() const {
    std::string s(status_name(status));
    if (status == Status::SeriesPass && series_order) s += "(" + std::to_string(*series_order) + ")";
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"tag", std::string(tag_name(tag))},
                        {"params", params.to_json()},
                        {"variant", variant},
                        {"status", std::string(status_name(status))},
                        {"difference", ghpq::to_json(difference)},
                        {"difference_text", to_text(difference)},
                        {"notes", notes}};
    if (series_order) j["series_order"] = *series_order;
    return j;
  }
};

/// Compares every equation; the first nonzero difference is kept.
inline IdentityReport judge(Tag tag, const IdentityParams& params, std::string variant,
                            const std::vector<Equation>& eqs, std::optional<int> series_order) {
  IdentityReport r;
  r.tag = tag;
  r.params = params;
  r.variant = std::move(variant);
  r.series_order = series_order;
  for (const auto& e : eqs) {
    Poly d = e.lhs - e.rhs;
    if (!d.is_zero()) {
      r.status = Status::Fail;
      r.difference = std::move(d);
      r.notes = "mismatch in " + e.label;
      return r;
    }
  }
  r.status = series_order ? Status::SeriesPass : Status::ExactPass;
  return r;
}

}  // namespace ghpq
