#pragma once
#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "symbol.hpp"

namespace bihamil {

// One multiplicative factor class each: monomials, integer exponentials e^{k*sym},
// and at most one harmonic sin/cos(j*sym) per term (products reduce by product-to-sum).
// Hyperbolics are never stored; they expand into e^{+-sym} at construction.

struct Harmonic {
  bool is_sin = true;
  int freq = 1;  // >= 1 after normalization
  Symbol arg;
};

struct TermKey {
  std::vector<std::pair<Symbol, int>> mono;  // exponent > 0, sorted by name
  std::vector<std::pair<Symbol, int>> expo;  // e^{k*sym}, k != 0, sorted by name
  std::optional<Harmonic> harm;
};

namespace detail {

inline int cmp_sym_vec(const Context& ctx, const std::vector<std::pair<Symbol, int>>& a,
                       const std::vector<std::pair<Symbol, int>>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ctx.cmp(a[i].first, b[i].first);
    if (c != 0) return c;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline int cmp_key(const Context& ctx, const TermKey& a, const TermKey& b) {
  if (int c = cmp_sym_vec(ctx, a.mono, b.mono)) return c;
  if (int c = cmp_sym_vec(ctx, a.expo, b.expo)) return c;
  int ha = a.harm ? (a.harm->is_sin ? 1 : 2) : 0;
  int hb = b.harm ? (b.harm->is_sin ? 1 : 2) : 0;
  if (ha != hb) return ha < hb ? -1 : 1;
  if (a.harm) {
    if (a.harm->freq != b.harm->freq) return a.harm->freq < b.harm->freq ? -1 : 1;
    if (int c = ctx.cmp(a.harm->arg, b.harm->arg)) return c;
  }
  return 0;
}

// Merge two factor lists sorted by symbol name, adding exponents; drops zeros.
inline std::vector<std::pair<Symbol, int>> merge_factors(
    const Context& ctx, const std::vector<std::pair<Symbol, int>>& a,
    const std::vector<std::pair<Symbol, int>>& b) {
  std::vector<std::pair<Symbol, int>> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && ctx.cmp(a[i].first, b[j].first) < 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || ctx.cmp(b[j].first, a[i].first) < 0) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace detail

class Scalar {
 public:
  Scalar() = default;  // context-free zero; adopts the other operand's context
  explicit Scalar(const Context& ctx) : ctx_(&ctx) {}

  static Scalar constant(const Context& ctx, const Rational& c) {
    Scalar s(ctx);
    if (c != 0) s.terms_.emplace_back(TermKey{}, c);
    return s;
  }
  static Scalar sym(const Context& ctx, Symbol v) {
    Scalar s(ctx);
    TermKey k;
    k.mono.emplace_back(v, 1);
    s.terms_.emplace_back(std::move(k), Rational(1));
    return s;
  }
  static Scalar exp_of(const Context& ctx, Symbol v, int k) {
    Scalar s(ctx);
    TermKey key;
    if (k != 0) key.expo.emplace_back(v, k);
    s.terms_.emplace_back(std::move(key), Rational(1));
    return s;
  }
  static Scalar sin_of(const Context& ctx, Symbol v, int j) {
    Scalar s(ctx);
    if (j == 0) return s;
    Rational c(1);
    if (j < 0) { j = -j; c = -1; }
    TermKey key;
    key.harm = Harmonic{true, j, v};
    s.terms_.emplace_back(std::move(key), c);
    return s;
  }
  static Scalar cos_of(const Context& ctx, Symbol v, int j) {
    Scalar s(ctx);
    if (j < 0) j = -j;
    if (j == 0) return constant(ctx, 1);
    TermKey key;
    key.harm = Harmonic{false, j, v};
    s.terms_.emplace_back(std::move(key), Rational(1));
    return s;
  }
  // sinh(j*v) = (e^{jv} - e^{-jv})/2, cosh(j*v) = (e^{jv} + e^{-jv})/2
  static Scalar sinh_of(const Context& ctx, Symbol v, int j = 1) {
    return (exp_of(ctx, v, j) - exp_of(ctx, v, -j)) * Rational(1, 2);
  }
  static Scalar cosh_of(const Context& ctx, Symbol v, int j = 1) {
    return (exp_of(ctx, v, j) + exp_of(ctx, v, -j)) * Rational(1, 2);
  }

  const Context* context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<TermKey, Rational>>& terms() const { return terms_; }

  // Constant terms only?  Returns the value if so.
  std::optional<Rational> as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].first.mono.empty() && terms_[0].first.expo.empty() &&
        !terms_[0].first.harm)
      return terms_[0].second;
    return std::nullopt;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    const Context* ctx = merge_ctx(a.ctx_, b.ctx_);
    Scalar out;
    out.ctx_ = ctx;
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.normalize();
    return out;
  }
  friend Scalar operator-(const Scalar& a) {
    Scalar out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Rational& c) {
    Scalar out = a;
    if (c == 0) { out.terms_.clear(); return out; }
    for (auto& t : out.terms_) t.second *= c;
    return out;
  }
  friend Scalar operator*(const Rational& c, const Scalar& a) { return a * c; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    const Context* ctx = merge_ctx(a.ctx_, b.ctx_);
    Scalar out;
    out.ctx_ = ctx;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) mul_terms(*ctx, ka, ca, kb, cb, out.terms_);
    out.normalize();
    return out;
  }

  Scalar pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a general expression");
    Scalar r = constant(ctx_ ? *ctx_ : throw_null(), 1), base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar differentiate(Symbol v) const {
    const Context& ctx = require_ctx();
    if (!ctx.is_coordinate(v))
      throw std::invalid_argument("cannot differentiate with respect to parameter " + ctx.name(v));
    Scalar out;
    out.ctx_ = ctx_;
    for (const auto& [key, coeff] : terms_) {
      // product rule over the three factor classes
      for (size_t i = 0; i < key.mono.size(); ++i) {
        if (key.mono[i].first != v) continue;
        TermKey k = key;
        int e = k.mono[i].second;
        if (e == 1) k.mono.erase(k.mono.begin() + i);
        else k.mono[i].second = e - 1;
        out.terms_.emplace_back(std::move(k), coeff * e);
      }
      for (size_t i = 0; i < key.expo.size(); ++i) {
        if (key.expo[i].first != v) continue;
        out.terms_.emplace_back(key, coeff * key.expo[i].second);
      }
      if (key.harm && key.harm->arg == v) {
        TermKey k = key;
        int j = k.harm->freq;
        if (k.harm->is_sin) {  // sin(jv)' = j cos(jv)
          k.harm->is_sin = false;
          out.terms_.emplace_back(std::move(k), coeff * j);
        } else {  // cos(jv)' = -j sin(jv)
          k.harm->is_sin = true;
          out.terms_.emplace_back(std::move(k), coeff * (-j));
        }
      }
    }
    out.normalize();
    return out;
  }

  // Polynomial substitution: replacement symbols may only occur in monomial factors.
  Scalar substitute(const std::map<Symbol, Scalar>& repl) const {
    const Context& ctx = require_ctx();
    Scalar out(ctx);
    for (const auto& [key, coeff] : terms_) {
      for (const auto& [s, k] : key.expo)
        if (repl.count(s))
          throw std::invalid_argument("substitution into exponential argument unsupported: " +
                                      ctx.name(s));
      if (key.harm && repl.count(key.harm->arg))
        throw std::invalid_argument("substitution into harmonic argument unsupported");
      Scalar term = constant(ctx, coeff);
      TermKey rest;
      rest.expo = key.expo;
      rest.harm = key.harm;
      for (const auto& [s, e] : key.mono) {
        auto it = repl.find(s);
        if (it != repl.end()) term = term * it->second.pow(e);
        else { TermKey mk; mk.mono.emplace_back(s, e); Scalar f(ctx); f.terms_.emplace_back(std::move(mk), Rational(1)); term = term * f; }
      }
      Scalar restf(ctx);
      restf.terms_.emplace_back(std::move(rest), Rational(1));
      out = out + term * restf;
    }
    return out;
  }

  // Exact evaluation at a rational point; defined only when every exponential and
  // harmonic argument evaluates to zero (e^0 = 1, sin 0 = 0, cos 0 = 1).
  Rational evaluate_rational(const std::map<Symbol, Rational>& at) const {
    Rational total(0);
    for (const auto& [key, coeff] : terms_) {
      Rational v = coeff;
      for (const auto& [s, e] : key.mono) {
        Rational base = lookup(at, s);
        for (int i = 0; i < e; ++i) v *= base;
      }
      Rational exparg(0);
      for (const auto& [s, k] : key.expo) exparg += Rational(k) * lookup(at, s);
      if (exparg != 0)
        throw std::domain_error("value is not rational: nonzero exponential argument");
      if (key.harm) {
        Rational harg = Rational(key.harm->freq) * lookup(at, key.harm->arg);
        if (harg != 0)
          throw std::domain_error("value is not rational: nonzero harmonic argument");
        if (key.harm->is_sin) v = 0;
      }
      total += v;
    }
    return total;
  }

  // Float evaluation, IEEE double (~15-16 significant digits per factor).
  double evaluate_double(const std::map<Symbol, Rational>& at) const {
    double total = 0;
    for (const auto& [key, coeff] : terms_) {
      double v = rat_double(coeff);
      for (const auto& [s, e] : key.mono) v *= std::pow(rat_double(lookup(at, s)), e);
      Rational exparg(0);
      for (const auto& [s, k] : key.expo) exparg += Rational(k) * lookup(at, s);
      v *= std::exp(rat_double(exparg));
      if (key.harm) {
        double harg = key.harm->freq * rat_double(lookup(at, key.harm->arg));
        v *= key.harm->is_sin ? std::sin(harg) : std::cos(harg);
      }
      total += v;
    }
    return total;
  }

  void collect_symbols(std::vector<Symbol>& out) const {
    for (const auto& [key, coeff] : terms_) {
      for (const auto& [s, e] : key.mono) out.push_back(s);
      for (const auto& [s, k] : key.expo) out.push_back(s);
      if (key.harm) out.push_back(key.harm->arg);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  void print(std::ostream& os) const {
    const Context& ctx = *ctx_;
    if (terms_.empty()) { os << "0"; return; }
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
      Rational c = coeff;
      if (first) {
        if (c < 0) { os << "-"; c = -c; }
      } else {
        if (c < 0) { os << " - "; c = -c; }
        else os << " + ";
      }
      first = false;
      std::vector<std::string> factors;
      for (const auto& [s, e] : key.mono) {
        std::string f = ctx.name(s);
        if (e != 1) f += "^" + std::to_string(e);
        factors.push_back(f);
      }
      for (const auto& [s, k] : key.expo) {
        std::string arg = ctx.name(s);
        if (k == -1) arg = "-" + arg;
        else if (k != 1) arg = std::to_string(k) + "*" + arg;
        factors.push_back("exp(" + arg + ")");
      }
      if (key.harm) {
        std::string arg = ctx.name(key.harm->arg);
        if (key.harm->freq != 1) arg = std::to_string(key.harm->freq) + "*" + arg;
        factors.push_back((key.harm->is_sin ? "sin(" : "cos(") + arg + ")");
      }
      if (factors.empty()) { os << rat_str(c); continue; }
      if (c != 1) os << rat_str(c) << "*";
      for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
  }

  std::string str() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

 private:
  static const Context* merge_ctx(const Context* a, const Context* b) {
    if (!a) return b;
    if (!b) return a;
    if (a != b) throw std::invalid_argument("symbol context mismatch");
    return a;
  }
  const Context& require_ctx() const {
    if (!ctx_) throw std::logic_error("scalar has no context");
    return *ctx_;
  }
  static const Context& throw_null() { throw std::logic_error("scalar has no context"); }

  static const Rational& lookup(const std::map<Symbol, Rational>& at, Symbol s) {
    auto it = at.find(s);
    if (it == at.end()) throw std::invalid_argument("unassigned symbol in evaluate");
    return it->second;
  }

  // term * term with harmonic product-to-sum; appends to out
  static void mul_terms(const Context& ctx, const TermKey& a, const Rational& ca,
                        const TermKey& b, const Rational& cb,
                        std::vector<std::pair<TermKey, Rational>>& out) {
    TermKey base;
    base.mono = detail::merge_factors(ctx, a.mono, b.mono);
    base.expo = detail::merge_factors(ctx, a.expo, b.expo);
    Rational c = ca * cb;
    if (!a.harm && !b.harm) {
      out.emplace_back(std::move(base), c);
      return;
    }
    if (a.harm && !b.harm) { base.harm = a.harm; out.emplace_back(std::move(base), c); return; }
    if (!a.harm && b.harm) { base.harm = b.harm; out.emplace_back(std::move(base), c); return; }
    if (a.harm->arg != b.harm->arg)
      throw std::invalid_argument("product of harmonics with different arguments unsupported");
    int ja = a.harm->freq, jb = b.harm->freq;
    Symbol arg = a.harm->arg;
    Rational half = c * Rational(1, 2);
    auto emit = [&](bool is_sin, int j, Rational coeff) {
      if (j < 0) { j = -j; if (is_sin) coeff = -coeff; }
      if (j == 0) {
        if (is_sin) return;  // sin 0 = 0
        TermKey k = base;
        out.emplace_back(std::move(k), coeff);
        return;
      }
      TermKey k = base;
      k.harm = Harmonic{is_sin, j, arg};
      out.emplace_back(std::move(k), coeff);
    };
    if (a.harm->is_sin && b.harm->is_sin) {        // sin a sin b = (cos(a-b) - cos(a+b))/2
      emit(false, ja - jb, half);
      emit(false, ja + jb, -half);
    } else if (!a.harm->is_sin && !b.harm->is_sin) {  // cos a cos b = (cos(a-b) + cos(a+b))/2
      emit(false, ja - jb, half);
      emit(false, ja + jb, half);
    } else {  // sin a cos b (swap so the sin comes first)
      int js = a.harm->is_sin ? ja : jb, jc = a.harm->is_sin ? jb : ja;
      emit(true, js + jc, half);
      emit(true, js - jc, half);
    }
  }

  void normalize() {
    if (!ctx_) { terms_.clear(); return; }
    const Context& ctx = *ctx_;
    std::stable_sort(terms_.begin(), terms_.end(), [&](const auto& x, const auto& y) {
      return detail::cmp_key(ctx, x.first, y.first) < 0;
    });
    std::vector<std::pair<TermKey, Rational>> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && detail::cmp_key(ctx, merged.back().first, t.first) == 0)
        merged.back().second += t.second;
      else
        merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms_ = std::move(merged);
  }

  const Context* ctx_ = nullptr;
  std::vector<std::pair<TermKey, Rational>> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  s.print(os);
  return os;
}

}  // namespace bihamil
