// ghpq: compute, verify, audit and heat subcommands.
//
// Exit codes: 0 success, 1 when some cell fails under the variant policy,
// 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ghpq/family.hpp"
#include "ghpq/heat.hpp"
#include "ghpq/heat_suite.hpp"
#include "ghpq/identity.hpp"
#include "ghpq/io/format.hpp"
#include "ghpq/io/parse.hpp"

using namespace ghpq;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::pair<int, int>> parse_pq_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : split(s, ';')) {
    auto parts = split(item, ',');
    if (parts.size() != 2) throw UsageError("--pq expects pairs like 1,1;2,1 but got '" + item + "'");
    int p = 0, q = 0;
    try {
      p = std::stoi(parts[0]);
      q = std::stoi(parts[1]);
    } catch (const std::exception&) {
      throw UsageError("--pq entry '" + item + "' is not a pair of integers");
    }
    if (p < 0 || q < 0 || p + q < 1) throw UsageError("--pq entry '" + item + "' needs p, q >= 0 and p + q >= 1");
    out.emplace_back(p, q);
  }
  if (out.empty()) throw UsageError("--pq is empty");
  return out;
}

std::vector<Tag> parse_tags(const std::string& s) {
  if (s == "all") return all_tags();
  std::vector<Tag> out;
  for (const auto& name : split(s, ',')) {
    auto t = tag_from_name(name);
    if (!t) throw UsageError("unknown tag '" + name + "'");
    out.push_back(*t);
  }
  return out;
}

std::map<Var, Poly> parse_subst(const std::string& s) {
  std::map<Var, Poly> out;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--subst entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    auto v = var_from_name(key);
    if (!v || (*v != Var::z && *v != Var::w && *v != Var::gamma))
      throw UsageError("--subst may bind z, w or gamma, not '" + key + "'");
    try {
      out[*v] = Poly(Rational::parse(item.substr(eq + 1)));
    } catch (const Error& e) {
      throw UsageError(std::string("--subst value: ") + e.what());
    }
  }
  return out;
}

Rational parse_rational_flag(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string emit_poly(const Poly& p, const std::string& format, const std::vector<Var>& columns) {
  if (format == "json") return to_json(p).dump();
  if (format == "csv") return to_csv(p, columns);
  if (format == "latex") return to_latex(p);
  return to_text(p);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  return out;
}

std::string junit(const std::vector<IdentityReport>& reports) {
  long failures = 0;
  for (const auto& r : reports) failures += !r.passed();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuites name=\"ghpq\" tests=\"" << reports.size() << "\" failures=\"" << failures << "\">\n";
  os << "  <testsuite name=\"verify\" tests=\"" << reports.size() << "\" failures=\"" << failures << "\">\n";
  for (const auto& r : reports) {
    os << "    <testcase classname=\"" << tag_name(r.tag) << "\" name=\""
       << xml_escape(r.variant + " " + r.params.str()) << "\"";
    if (r.passed()) {
      os << "/>\n";
    } else {
      os << ">\n      <failure message=\"" << xml_escape(r.notes) << "\">" << xml_escape(to_text(r.difference))
         << "</failure>\n    </testcase>\n";
    }
  }
  os << "  </testsuite>\n</testsuites>\n";
  return os.str();
}

std::string text_reports(const std::vector<IdentityReport>& reports, const AuditSummary& s) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << tag_name(r.tag) << " " << r.status_text() << " " << r.variant << " " << r.params.str();
    if (!r.passed()) os << " diff: " << to_text(r.difference);
    if (!r.notes.empty()) os << " (" << r.notes << ")";
    os << "\n";
  }
  os << "cells " << s.cells << ", failing cells " << s.cell_failures << ", ExactPass " << s.exact_pass
     << ", SeriesPass " << s.series_pass << ", Fail " << s.fail << "\n";
  return os.str();
}

json reports_json(const std::vector<IdentityReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

struct GridFlags {
  int nmax = 6, mmax = 6, order = 10, prime_max = 3, jk_max = 3;
  std::string pq = "1,1;2,1;1,2;2,2";
  std::string variant = "both";
  unsigned jobs = 1;

  void attach(CLI::App* app) {
    app->add_option("--nmax", nmax, "largest n")->check(CLI::NonNegativeNumber);
    app->add_option("--mmax", mmax, "largest m")->check(CLI::NonNegativeNumber);
    app->add_option("--pq", pq, "order pairs, e.g. \"1,1;2,1\"");
    app->add_option("--order", order, "series truncation order")->check(CLI::PositiveNumber);
    app->add_option("--prime-max", prime_max, "largest n', m' for Nielsen sums")->check(CLI::NonNegativeNumber);
    app->add_option("--jk-max", jk_max, "largest j, k for derivative and weighted series tags")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--variant", variant, "printed, corrected or both")
        ->check(CLI::IsMember({"printed", "corrected", "both"}));
    app->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  AuditConfig config(std::vector<Tag> tags) const {
    AuditConfig cfg;
    cfg.tags = std::move(tags);
    cfg.n_max = nmax;
    cfg.m_max = mmax;
    cfg.pq = parse_pq_list(pq);
    cfg.order = order;
    cfg.prime_max = prime_max;
    cfg.jk_max = jk_max;
    cfg.policy = policy_from_name(variant);
    cfg.jobs = jobs;
    return cfg;
  }
};

json config_json(const AuditConfig& cfg, const std::string& variant) {
  json pq = json::array();
  for (auto [p, q] : cfg.pq) pq.push_back({p, q});
  return {{"nmax", cfg.n_max}, {"mmax", cfg.m_max},         {"pq", pq},
          {"order", cfg.order}, {"prime_max", cfg.prime_max}, {"jk_max", cfg.jk_max},
          {"variant", variant}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (p,q) Gould-Hopper polynomials: construction, identity audit and heat solutions.\n"
               "p = q = 0 is rejected everywhere (p + q >= 1)."};
  app.require_subcommand(1);

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "build H_{n,m}^{(p,q)}(z,w|gamma)");
  FamilyParams fp;
  std::string strategy = "explicit", subst, compute_format = "text";
  compute_cmd->add_option("--p", fp.p, "order in z")->required()->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--q", fp.q, "order in w")->required()->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--n", fp.n, "degree index in z")->required()->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--m", fp.m, "degree index in w")->required()->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--strategy", strategy, "construction route")
      ->check(CLI::IsMember({"explicit", "operational", "creation", "recurrence", "genfun", "hypergeom"}));
  compute_cmd->add_option("--subst", subst, "substitution, e.g. z=1/2,gamma=-1");
  compute_cmd->add_option("--format", compute_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check identities over a parameter grid");
  std::string tag_arg, verify_format = "json";
  GridFlags verify_grid;
  verify_cmd->add_option("--tag", tag_arg, "tag name, comma list, or all")->required();
  verify_grid.attach(verify_cmd);
  verify_cmd->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"json", "junit", "text"}));

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "full identity audit plus the seeded heat suite, as JSON");
  std::uint64_t seed = 0;
  int heat_cases = 25;
  GridFlags audit_grid_flags;
  audit_cmd->add_option("--seed", seed, "seed for the random heat suite");
  audit_cmd->add_option("--heat-cases", heat_cases, "random initial data in the heat suite")
      ->check(CLI::NonNegativeNumber);
  audit_grid_flags.attach(audit_cmd);

  // heat
  auto* heat_cmd = app.add_subcommand("heat", "solve c d_z^p d_w^q u = d_t u from polynomial data");
  int hp = 1, hq = 1;
  std::string c_arg = "1", initial_arg, heat_format = "text";
  heat_cmd->add_option("--p", hp, "order in z")->required()->check(CLI::NonNegativeNumber);
  heat_cmd->add_option("--q", hq, "order in w")->required()->check(CLI::NonNegativeNumber);
  heat_cmd->add_option("--c", c_arg, "constant c as a rational");
  heat_cmd->add_option("--initial", initial_arg, "initial datum in z, w")->required();
  heat_cmd->add_option("--format", heat_format, "output format")->check(CLI::IsMember({"text", "json", "csv", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute_cmd) {
      std::map<Var, Poly> bindings;
      Strategy st;
      try {
        fp.validate();
        st = strategy_from_name(strategy);
        if (!subst.empty()) bindings = parse_subst(subst);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      Poly h = compute(fp, st).poly;
      if (!bindings.empty()) h = h.subst(bindings);
      std::string out = emit_poly(h, compute_format, {Var::z, Var::w, Var::gamma});
      std::cout << out << (out.empty() || out.back() != '\n' ? "\n" : "");
      return 0;
    }

    if (*verify_cmd || *audit_cmd) {
      const bool is_audit = audit_cmd->parsed();
      GridFlags& g = is_audit ? audit_grid_flags : verify_grid;
      AuditConfig cfg;
      try {
        cfg = g.config(is_audit ? all_tags() : parse_tags(tag_arg));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      AuditResult res = audit_grid(cfg);
      long fails = res.summary.cell_failures;
      if (!is_audit) {
        if (verify_format == "junit") std::cout << junit(res.reports);
        else if (verify_format == "text") std::cout << text_reports(res.reports, res.summary);
        else std::cout << reports_json(res.reports).dump(1) << "\n";
        return fails ? 1 : 0;
      }
      HeatSuiteResult heat = heat_random_suite(seed, heat_cases);
      fails += heat.failures();
      json doc = {{"seed", seed},
                  {"config", config_json(cfg, g.variant)},
                  {"summary", res.summary.to_json()},
                  {"reports", reports_json(res.reports)},
                  {"heat", heat.to_json()},
                  {"passed", fails == 0}};
      std::cout << doc.dump(1) << "\n";
      return fails ? 1 : 0;
    }

    if (*heat_cmd) {
      HeatProblem pb;
      try {
        pb.p = hp;
        pb.q = hq;
        pb.c = parse_rational_flag(c_arg, "--c");
        pb.initial = parse_poly_expr(initial_arg, {Var::z, Var::w});
        pb.validate();
      } catch (const Error& e) {
        throw UsageError(std::string("--initial: ") + e.what());
      }
      Poly u = solve(pb).u;
      Poly res = residual(pb, u);
      if (heat_format == "json") {
        json doc = {{"p", pb.p},
                    {"q", pb.q},
                    {"c", pb.c.str()},
                    {"initial", to_json(pb.initial)},
                    {"initial_text", to_text(pb.initial)},
                    {"u", to_json(u)},
                    {"u_text", to_text(u)},
                    {"residual", to_json(res)},
                    {"residual_text", to_text(res)}};
        std::cout << doc.dump(1) << "\n";
      } else if (heat_format == "csv") {
        std::cout << to_csv(u, {Var::z, Var::w, Var::t});
      } else if (heat_format == "latex") {
        std::cout << "u = " << to_latex(u) << "\n" << "residual = " << to_latex(res) << "\n";
      } else {
        std::cout << "u = " << to_text(u) << "\n" << "residual = " << to_text(res) << "\n";
      }
      return res.is_zero() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
