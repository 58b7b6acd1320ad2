#pragma once
#include <cctype>
#include <string>

#include "scalar.hpp"

namespace bihamil {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(p) + ": " + msg), pos(p) {}
};

// Recursive-descent parser for the ASCII expression grammar:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ('*'|'/') factor }        ('/' requires a constant divisor)
//   factor := base [ '^' integer ]
//   base   := integer | identifier | func '(' expr ')' | '(' expr ')'
//   func   := exp | sin | cos | sinh | cosh      (argument must reduce to k*sym)
class Parser {
 public:
  Parser(const std::string& text, Context& ctx) : text_(text), ctx_(ctx) {}

  Scalar parse() {
    Scalar s = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return s;
  }

 private:
  Scalar parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Scalar acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Scalar t = parse_term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Scalar parse_term() {
    Scalar acc = parse_factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '*' && c != '/') break;
      size_t at = pos_;
      get();
      Scalar f = parse_factor();
      if (c == '*') {
        acc = acc * f;
      } else {
        auto k = f.as_constant();
        if (!k || *k == 0) throw ParseError(at, "division only by a nonzero constant");
        acc = acc * (Rational(1) / *k);
      }
    }
    return acc;
  }

  Scalar parse_factor() {
    Scalar base = parse_base();
    skip_ws();
    if (peek() == '^') {
      size_t at = pos_;
      get();
      skip_ws();
      bool neg = false;
      if (peek() == '-') { neg = true; get(); }
      if (!std::isdigit(peek())) throw ParseError(pos_, "integer exponent expected");
      long e = parse_uint();
      if (neg) {
        auto k = base.as_constant();
        if (!k || *k == 0) throw ParseError(at, "negative exponent only on a nonzero constant");
        Rational inv = Rational(1) / *k;
        return Scalar::constant(*base.context(), inv).pow(static_cast<int>(e));
      }
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Scalar parse_base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Scalar s = parse_expr();
      expect(')');
      return s;
    }
    if (std::isdigit(c)) {
      std::string digits;
      while (std::isdigit(peek())) digits += get();
      return Scalar::constant(ctx_, Rational(Int(digits)));
    }
    if (std::isalpha(c) || c == '_') {
      size_t at = pos_;
      std::string id = parse_ident();
      skip_ws();
      if ((id == "exp" || id == "sin" || id == "cos" || id == "sinh" || id == "cosh") &&
          peek() == '(') {
        get();
        size_t argat = pos_;
        Scalar arg = parse_expr();
        expect(')');
        return apply_func(id, arg, argat);
      }
      if (!ctx_.has(id)) throw ParseError(at, "undeclared identifier: " + id);
      return Scalar::sym(ctx_, ctx_.lookup(id));
    }
    throw ParseError(pos_, "expression expected");
  }

  // func argument must reduce to k*sym (or 0) with integer k
  Scalar apply_func(const std::string& fn, const Scalar& arg, size_t at) {
    if (arg.is_zero()) {
      if (fn == "exp" || fn == "cosh") return Scalar::constant(ctx_, 1);
      if (fn == "cos") return Scalar::constant(ctx_, 1);
      return Scalar::constant(ctx_, 0);  // sin, sinh
    }
    const auto& ts = arg.terms();
    if (ts.size() != 1) throw ParseError(at, fn + " argument must be integer*symbol");
    const auto& [key, coeff] = ts[0];
    if (!key.expo.empty() || key.harm || key.mono.size() != 1 || key.mono[0].second != 1 ||
        denominator(coeff) != 1)
      throw ParseError(at, fn + " argument must be integer*symbol");
    Symbol s = key.mono[0].first;
    int k;
    try {
      k = static_cast<int>(numerator(coeff).convert_to<long>());
    } catch (...) {
      throw ParseError(at, fn + " argument multiple too large");
    }
    if (fn == "exp") return Scalar::exp_of(ctx_, s, k);
    if (fn == "sin") return Scalar::sin_of(ctx_, s, k);
    if (fn == "cos") return Scalar::cos_of(ctx_, s, k);
    if (fn == "sinh") return Scalar::sinh_of(ctx_, s, k);
    return Scalar::cosh_of(ctx_, s, k);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("'") + c + "' expected");
    get();
  }
  long parse_uint() {
    skip_ws();
    size_t at = pos_;
    std::string digits;
    while (std::isdigit(peek())) digits += get();
    if (digits.empty()) throw ParseError(at, "number expected");
    if (digits.size() > 18) throw ParseError(at, "integer literal too large");
    return std::stol(digits);
  }
  std::string parse_ident() {
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') id += get();
    return id;
  }

  const std::string& text_;
  Context& ctx_;
  size_t pos_ = 0;
};

inline Scalar parse_scalar(const std::string& text, Context& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace bihamil
