#pragma once

// Recursive-descent parser for polynomial expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' INT)?
//   primary := INT ('/' INT)? | VARIABLE | '(' expr ')'
//
// Variables are restricted to a caller-supplied set.

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "ghpq/errors.hpp"
#include "ghpq/poly.hpp"
#include "ghpq/rational.hpp"

namespace ghpq {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const std::set<Var>& allowed) : src_(src), allowed_(allowed) {}

  Poly parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      skip_ws();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  Poly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    if (peek() == '-') throw ParseError("negative exponent", at);
    std::string digits = integer();
    if (digits.empty()) throw ParseError("expected exponent", at);
    if (digits.size() > 3 || std::stoi(digits) > 255) throw ParseError("exponent too large", at);
    return base.pow(std::stoi(digits));
  }

  Poly primary() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", at);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      std::string den = "1";
      skip_ws();
      if (accept('/')) {
        skip_ws();
        std::size_t den_at = pos_;
        den = integer();
        if (den.empty()) throw ParseError("expected denominator", den_at);
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_at);
      }
      return Poly(Rational::parse(num + "/" + den));
    }
    if (is_ident_start(c)) {
      std::string name = identifier();
      auto v = var_from_name(name);
      if (!v) throw ParseError("unknown variable '" + name + "'", at);
      if (!allowed_.count(*v)) throw ParseError("variable '" + name + "' is not allowed here", at);
      return Poly::var(*v);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (is_ident_start(src_[pos_]) || src_[pos_] == '\'')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || u >= 0x80;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  const std::set<Var>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly_expr(std::string_view src, const std::set<Var>& allowed_vars) {
  return detail::ExprParser(src, allowed_vars).parse();
}

/// Parser accepting every ring variable.
inline Poly parse_poly(std::string_view src) {
  static const std::set<Var> all(kAllVars.begin(), kAllVars.end());
  return parse_poly_expr(src, all);
}

}  // namespace ghpq
