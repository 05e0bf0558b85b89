#pragma once

// Canonical serializations of Poly: text, LaTeX, JSON and CSV. All of them
// walk the terms in canonical order, so output is byte-stable.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

namespace detail {

// Display order inside a monomial: gamma-type parameters lead, as in `2*g*z`.
// Term order is unaffected.
inline std::vector<std::pair<Var, int>> factors(const Monomial& m) {
  std::vector<std::pair<Var, int>> out;
  for (Var v : {Var::gamma, Var::gamma_prime})
    if (m.exp(v) > 0) out.emplace_back(v, m.exp(v));
  for (Var v : kAllVars)
    if (v != Var::gamma && v != Var::gamma_prime && m.exp(v) > 0) out.emplace_back(v, m.exp(v));
  return out;
}

}  // namespace detail

/// `z^2*w + 2*g*z - 3/2`. Parses back to the same polynomial.
inline std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff.sign() < 0;
    Rational mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (auto [v, e] : detail::factors(t.mono)) {
      if (!body.empty()) body += "*";
      body += var_name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += mag.str() + "*" + body;
    }
  }
  return out;
}

/// `z^{2}w + 2\gamma z`.
inline std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  auto latex_rational = [](const Rational& r) {
    return r.is_integer() ? r.num_str() : "\\frac{" + r.num_str() + "}{" + r.den_str() + "}";
  };
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff.sign() < 0;
    Rational mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    bool after_macro = false;
    for (auto [v, e] : detail::factors(t.mono)) {
      if (after_macro) body += " ";
      std::string_view name = var_latex(v);
      body += name;
      after_macro = e == 1 && name.front() == '\\' && name.back() != '\'';
      if (e > 1) body += "^{" + std::to_string(e) + "}";
    }
    if (body.empty()) {
      out += latex_rational(mag);
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += latex_rational(mag) + body;
    }
  }
  return out;
}

/// Array of {exps: {var: int}, num: string, den: string}.
inline nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (auto [v, e] : detail::factors(t.mono)) exps[std::string(var_name(v))] = e;
    arr.push_back({{"exps", exps}, {"num", t.coeff.num_str()}, {"den", t.coeff.den_str()}});
  }
  return arr;
}

inline Poly poly_from_json(const nlohmann::json& arr) {
  std::vector<Term> terms;
  for (const auto& item : arr) {
    Monomial m;
    for (const auto& [name, e] : item.at("exps").items()) {
      auto v = var_from_name(name);
      if (!v) throw ParseError("unknown variable '" + name + "' in JSON polynomial", 0);
      m.set(*v, e.get<int>());
    }
    terms.push_back({m, Rational::from_parts(item.at("num").get<std::string>(), item.at("den").get<std::string>())});
  }
  return Poly::from_terms(std::move(terms));
}

/// One row per term: exponent columns for `columns`, then num, den.
inline std::string to_csv(const Poly& p, const std::vector<Var>& columns) {
  std::ostringstream os;
  for (Var v : columns) os << var_name(v) << ",";
  os << "num,den\n";
  for (const auto& t : p.terms()) {
    for (Var v : columns) os << t.mono.exp(v) << ",";
    os << t.coeff.num_str() << "," << t.coeff.den_str() << "\n";
  }
  return os.str();
}

}  // namespace ghpq
