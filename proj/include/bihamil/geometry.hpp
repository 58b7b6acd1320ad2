#pragma once
#include <map>

#include "scalar.hpp"

namespace bihamil {

struct Chart {
  const Context* ctx = nullptr;
  std::vector<Symbol> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  int index_of(Symbol s) const {
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == s) return static_cast<int>(i);
    throw std::invalid_argument("symbol is not a chart coordinate");
  }
  bool operator==(const Chart& o) const { return ctx == o.ctx && coords == o.coords; }
  bool operator!=(const Chart& o) const { return !(*this == o); }
};

inline Chart make_chart(Context& ctx, const std::vector<std::string>& names) {
  Chart c;
  c.ctx = &ctx;
  for (const std::string& n : names) c.coords.push_back(ctx.coordinate(n));
  return c;
}

inline Chart make_chart(Context& ctx, std::initializer_list<const char*> names) {
  return make_chart(ctx, std::vector<std::string>(names.begin(), names.end()));
}

namespace detail {

// Sorts idx ascending; returns the permutation sign, or 0 on a repeated index.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) { std::swap(idx[i], idx[j]); sign = -sign; }
    }
  return sign;
}

}  // namespace detail

// Grade-p antisymmetric contravariant field; components stored on strictly
// increasing index tuples, all signs handled through one permutation helper.
class Multivector {
 public:
  Multivector(Chart chart, int grade) : chart_(std::move(chart)), grade_(grade) {
    if (grade_ < 0 || grade_ > chart_.dim()) throw std::invalid_argument("bad grade");
  }

  const Chart& chart() const { return chart_; }
  int grade() const { return grade_; }
  const std::map<std::vector<int>, Scalar>& components() const { return comps_; }

  void add_term(std::vector<int> idx, const Scalar& value) {
    if (static_cast<int>(idx.size()) != grade_) throw std::invalid_argument("index arity");
    int sign = detail::sort_sign(idx);
    if (sign == 0 || value.is_zero()) return;
    Scalar v = sign < 0 ? -value : value;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
      comps_.emplace(std::move(idx), std::move(v));
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  // Signed component for an arbitrary index tuple.
  Scalar component(std::vector<int> idx) const {
    int sign = detail::sort_sign(idx);
    if (sign == 0) return Scalar(*chart_.ctx);
    auto it = comps_.find(idx);
    if (it == comps_.end()) return Scalar(*chart_.ctx);
    return sign < 0 ? -it->second : it->second;
  }

  bool is_zero() const { return comps_.empty(); }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same(a, b);
    Multivector out = a;
    for (const auto& [idx, v] : b.comps_) out.add_term(idx, v);
    return out;
  }
  friend Multivector operator-(const Multivector& a) {
    Multivector out = a;
    for (auto& [idx, v] : out.comps_) v = -v;
    return out;
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }
  friend Multivector operator*(const Scalar& f, const Multivector& a) {
    Multivector out(a.chart_, a.grade_);
    for (const auto& [idx, v] : a.comps_) out.add_term(idx, f * v);
    return out;
  }
  friend Multivector operator*(const Rational& c, const Multivector& a) {
    return Scalar::constant(*a.chart_.ctx, c) * a;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    require_same(a, b);
    return (a - b).is_zero();
  }

  // deterministic report form, e.g. "-z dx^dz + dy^dz"
  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [idx, v] : comps_) {
      if (!out.empty()) out += "  +  ";
      out += "(" + v.str() + ")";
      for (size_t i = 0; i < idx.size(); ++i)
        out += (i ? "^d" : " d") + chart_.ctx->name(chart_.coords[idx[i]]);
    }
    return out;
  }

  static void require_same(const Multivector& a, const Multivector& b) {
    if (a.chart_ != b.chart_) throw std::invalid_argument("chart mismatch");
    if (a.grade_ != b.grade_) throw std::invalid_argument("grade mismatch");
  }

 private:
  Chart chart_;
  int grade_;
  std::map<std::vector<int>, Scalar> comps_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.chart() != b.chart()) throw std::invalid_argument("chart mismatch");
  int g = a.grade() + b.grade();
  if (g > a.chart().dim()) throw std::invalid_argument("wedge grade exceeds dimension");
  Multivector out(a.chart(), g);
  for (const auto& [ia, va] : a.components())
    for (const auto& [ib, vb] : b.components()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), va * vb);
    }
  return out;
}

namespace detail {

// enumerate strictly increasing index tuples
inline void increasing_tuples(int dim, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) { out.push_back(cur); return; }
    for (int i = start; i < dim; ++i) { cur.push_back(i); self(self, i + 1); cur.pop_back(); }
  };
  rec(rec, 0);
  if (len == 0) out.push_back({});
}

inline Scalar d(const Multivector& t, const std::vector<int>& idx, int mu) {
  return t.component(idx).differentiate(t.chart().coords[mu]);
}

// Lie derivative of a grade-p field along a vector field
inline Multivector lie_derivative(const Multivector& x, const Multivector& t) {
  const Chart& ch = x.chart();
  int n = ch.dim(), p = t.grade();
  Multivector out(ch, p);
  std::vector<std::vector<int>> tuples;
  increasing_tuples(n, p, tuples);
  for (const auto& idx : tuples) {
    Scalar v(*ch.ctx);
    for (int rho = 0; rho < n; ++rho) {
      v = v + x.component({rho}) * d(t, idx, rho);
      for (int slot = 0; slot < p; ++slot) {
        std::vector<int> jdx = idx;
        jdx[slot] = rho;
        v = v - t.component(jdx) * d(x, {idx[slot]}, rho);
      }
    }
    out.add_term(idx, v);
  }
  return out;
}

// one-sided bivector-bivector bracket: F(P,Q)^{BCD} = sum_A P^{AB} dA Q^{CD}
//                                                   + P^{AD} dA Q^{BC} + P^{AC} dA Q^{DB}
inline Multivector bb_half(const Multivector& p, const Multivector& q) {
  const Chart& ch = p.chart();
  int n = ch.dim();
  Multivector out(ch, 3);
  std::vector<std::vector<int>> tuples;
  increasing_tuples(n, 3, tuples);
  for (const auto& t : tuples) {
    int B = t[0], C = t[1], D = t[2];
    Scalar v(*ch.ctx);
    for (int A = 0; A < n; ++A) {
      v = v + p.component({A, B}) * d(q, {C, D}, A);
      v = v + p.component({A, D}) * d(q, {B, C}, A);
      v = v + p.component({A, C}) * d(q, {D, B}, A);
    }
    out.add_term(t, v);
  }
  return out;
}

}  // namespace detail

// Schouten-Nijenhuis bracket.  Normalization is fixed so that for a verified
// Jacobi pair schouten(L, L) = 2*wedge(E, L) holds on the nose; for a
// (vector, grade-p) pair this is the Lie derivative.  Supported grade pairs:
// (1, p) and (p, 1) for any p >= 1, and (2, 2).
inline Multivector schouten(const Multivector& a, const Multivector& b) {
  if (a.chart() != b.chart()) throw std::invalid_argument("chart mismatch");
  if (a.grade() == 0 || b.grade() == 0) throw std::invalid_argument("grade 0 argument");
  if (a.grade() == 1) return detail::lie_derivative(a, b);
  if (b.grade() == 1) return -detail::lie_derivative(b, a);  // graded antisymmetry
  if (a.grade() == 2 && b.grade() == 2)
    return detail::bb_half(a, b) + detail::bb_half(b, a);
  throw std::invalid_argument("unsupported grade pair for schouten");
}

inline Scalar poisson_bracket(const Scalar& f, const Scalar& g, const Multivector& p) {
  if (p.grade() != 2) throw std::invalid_argument("bivector expected");
  const Chart& ch = p.chart();
  Scalar out(*ch.ctx);
  for (const auto& [idx, v] : p.components()) {
    Symbol xm = ch.coords[idx[0]], xn = ch.coords[idx[1]];
    out = out + v * (f.differentiate(xm) * g.differentiate(xn) -
                     f.differentiate(xn) * g.differentiate(xm));
  }
  return out;
}

inline Scalar apply_vector(const Multivector& e, const Scalar& f) {
  const Chart& ch = e.chart();
  Scalar out(*ch.ctx);
  for (const auto& [idx, v] : e.components()) out = out + v * f.differentiate(ch.coords[idx[0]]);
  return out;
}

// {f,g} = Lambda(df, dg) + f Eg - g Ef
inline Scalar jacobi_bracket(const Scalar& f, const Scalar& g, const Multivector& lambda,
                             const Multivector& e) {
  return poisson_bracket(f, g, lambda) + f * apply_vector(e, g) - g * apply_vector(e, f);
}

// Pfaffian of the component matrix on an even-dimensional chart,
// by recursive expansion along the first remaining index.
inline Scalar pfaffian_rec(const Multivector& p, const std::vector<int>& rows) {
  const Context& ctx = *p.chart().ctx;
  if (rows.empty()) return Scalar::constant(ctx, 1);
  Scalar out(ctx);
  int i0 = rows[0];
  int sign = 1;
  for (size_t j = 1; j < rows.size(); ++j) {
    std::vector<int> rest;
    for (size_t k = 1; k < rows.size(); ++k)
      if (k != j) rest.push_back(rows[k]);
    Scalar term = p.component({i0, rows[j]}) * pfaffian_rec(p, rest);
    out = sign > 0 ? out + term : out - term;
    sign = -sign;
  }
  return out;
}

inline Scalar pfaffian(const Multivector& p) {
  if (p.grade() != 2) throw std::invalid_argument("bivector expected");
  if (p.chart().dim() % 2 != 0) throw std::invalid_argument("odd-dimensional chart");
  std::vector<int> rows;
  for (int i = 0; i < p.chart().dim(); ++i) rows.push_back(i);
  return pfaffian_rec(p, rows);
}

// X_H^mu = P^{mu nu} d_nu H, so that X_H(f) = {f, H}
inline Multivector hamiltonian_vector_field(const Scalar& h, const Multivector& p) {
  const Chart& ch = p.chart();
  Multivector out(ch, 1);
  for (int mu = 0; mu < ch.dim(); ++mu) {
    Scalar v(*ch.ctx);
    for (int nu = 0; nu < ch.dim(); ++nu)
      v = v + p.component({mu, nu}) * h.differentiate(ch.coords[nu]);
    out.add_term({mu}, v);
  }
  return out;
}

}  // namespace bihamil
