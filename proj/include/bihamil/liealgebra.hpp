#pragma once
#include <array>
#include <optional>

#include "geometry.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "rng.hpp"

namespace bihamil {

// Structure constants are stored for a < b (0-based); the Jacobi identity is
// validated at construction.
class LieAlgebraDef {
 public:
  // entries: (a, b, c, value) 1-based, as commutators [X_a, X_b] = sum value*X_c
  LieAlgebraDef(std::string name, int dim,
                std::vector<std::array<int, 4>> entries_1based = {})
      : name_(std::move(name)), dim_(dim) {
    for (const auto& e : entries_1based) set(e[0] - 1, e[1] - 1, e[2] - 1, Rational(e[3]));
    validate();
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  void set(int a, int b, int c, const Rational& v) {
    if (a == b) { if (v != 0) throw std::invalid_argument("f_aa nonzero"); return; }
    if (a < b) f_[{a, b, c}] = v;
    else f_[{b, a, c}] = -v;
  }

  Rational f(int a, int b, int c) const {
    if (a == b) return 0;
    if (a < b) {
      auto it = f_.find({a, b, c});
      return it == f_.end() ? Rational(0) : it->second;
    }
    return -f(b, a, c);
  }

  // [X_a, X_b] as a coefficient vector
  std::vector<Rational> bracket(int a, int b) const {
    std::vector<Rational> out(dim_, Rational(0));
    for (int c = 0; c < dim_; ++c) out[c] = f(a, b, c);
    return out;
  }

 private:
  void validate() const {
    for (int a = 0; a < dim_; ++a)
      for (int b = a + 1; b < dim_; ++b)
        for (int c = b + 1; c < dim_; ++c)
          for (int e = 0; e < dim_; ++e) {
            Rational sum(0);
            for (int d = 0; d < dim_; ++d)
              sum += f(a, b, d) * f(d, c, e) + f(b, c, d) * f(d, a, e) +
                     f(c, a, d) * f(d, b, e);
            if (sum != 0)
              throw std::invalid_argument("structure constants violate the Jacobi identity: " +
                                          name_);
          }
  }

  std::string name_;
  int dim_;
  std::map<std::array<int, 3>, Rational> f_;
};

// (chi_a)_b^c = -f_{ab}^c (row b, column c); (Y^c)_{ab} = -f_{ab}^c (antisymmetric)
struct AdjointReps {
  std::vector<RatMat> chi;
  std::vector<RatMat> yrep;
};

inline AdjointReps adjoint_reps(const LieAlgebraDef& g) {
  int n = g.dim();
  AdjointReps r;
  for (int a = 0; a < n; ++a) {
    RatMat m(n, std::vector<Rational>(n, Rational(0)));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m[b][c] = -g.f(a, b, c);
    r.chi.push_back(std::move(m));
  }
  for (int c = 0; c < n; ++c) {
    RatMat m(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[a][b] = -g.f(a, b, c);
    r.yrep.push_back(std::move(m));
  }
  return r;
}

// --- catalog -----------------------------------------------------------------

inline LieAlgebraDef lie_ii() { return {"II", 3, {{2, 3, 1, 1}}}; }
inline LieAlgebraDef lie_iii() {
  return {"III", 3, {{1, 2, 2, -1}, {1, 2, 3, -1}, {1, 3, 2, -1}, {1, 3, 3, -1}}};
}
inline LieAlgebraDef lie_iv() {
  return {"IV", 3, {{1, 2, 2, -1}, {1, 2, 3, 1}, {1, 3, 3, -1}}};
}
inline LieAlgebraDef lie_vi0() { return {"VI0", 3, {{1, 3, 2, 1}, {2, 3, 1, 1}}}; }
inline LieAlgebraDef lie_vii0() { return {"VII0", 3, {{1, 3, 2, -1}, {2, 3, 1, 1}}}; }
inline LieAlgebraDef lie_ii_r() { return {"II+R", 4, {{2, 3, 1, 1}}}; }

inline std::vector<LieAlgebraDef> register_catalog() {
  return {lie_ii(), lie_iii(), lie_iv(), lie_vi0(), lie_vii0(), lie_ii_r()};
}

// --- automorphisms -----------------------------------------------------------

// A acts on generators by X_a -> sum_e A[a][e] X_e.
inline bool is_automorphism(const LieAlgebraDef& g, const RatMat& a) {
  int n = g.dim();
  if (rmat_det(a) == 0) return false;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int d = 0; d < n; ++d) {
        Rational lhs(0);  // f_{pq}^c A[c][d]
        for (int c = 0; c < n; ++c) lhs += g.f(p, q, c) * a[c][d];
        Rational rhs(0);  // A[p][e] A[q][h] f_{eh}^d
        for (int e = 0; e < n; ++e)
          for (int h = 0; h < n; ++h) rhs += a[p][e] * a[q][h] * g.f(e, h, d);
        if (lhs != rhs) return false;
      }
  return true;
}

inline RatMat instantiate_automorphism(const LieAlgebraDef& g, const RatMat& a) {
  int n = g.dim();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("dimension mismatch");
  if (rmat_det(a) == 0) throw std::invalid_argument("zero determinant");
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int d = 0; d < n; ++d) {
        Rational lhs(0), rhs(0);
        for (int c = 0; c < n; ++c) lhs += g.f(p, q, c) * a[c][d];
        for (int e = 0; e < n; ++e)
          for (int h = 0; h < n; ++h) rhs += a[p][e] * a[q][h] * g.f(e, h, d);
        if (lhs != rhs)
          throw std::invalid_argument("not an automorphism of " + g.name() + ": bracket [" +
                                      std::to_string(p + 1) + "," + std::to_string(q + 1) +
                                      "] not preserved");
      }
  return a;
}

// Rejection sampling over small integer matrices; deterministic for a fixed seed.
inline std::optional<RatMat> random_automorphism(const LieAlgebraDef& g, Rng& rng,
                                                 int max_tries = 200000) {
  int n = g.dim();
  for (int t = 0; t < max_tries; ++t) {
    RatMat a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = Rational(rng.range(-2, 2));
    if (is_automorphism(g, a)) return a;
  }
  return std::nullopt;
}

// Automorphism family of II+R: first row (a22*a33 - a23*a32, 0, 0, 0), rows two
// and three free, last row (a41, 0, 0, a44).  The shape forces the homomorphism
// condition; only det != 0 remains to check.
struct IIRAutomorphismValues {
  Rational a21, a22, a23, a24, a31, a32, a33, a34, a41, a44;
};

inline RatMat ii_r_automorphism(const IIRAutomorphismValues& v) {
  RatMat a = {{v.a22 * v.a33 - v.a23 * v.a32, 0, 0, 0},
              {v.a21, v.a22, v.a23, v.a24},
              {v.a31, v.a32, v.a33, v.a34},
              {v.a41, 0, 0, v.a44}};
  return instantiate_automorphism(lie_ii_r(), a);
}

// --- vielbeins ---------------------------------------------------------------

struct Vielbein {
  LieAlgebraDef algebra;
  Chart chart;
  ScalarMat frame;    // e_a^mu, row a, column mu
  ScalarMat coframe;  // e^a_mu stored as coframe[mu][a]; exact inverse of frame
};

inline Vielbein make_vielbein(const LieAlgebraDef& g, Chart chart, ScalarMat frame) {
  if (static_cast<int>(frame.size()) != g.dim() || chart.dim() != g.dim())
    throw std::invalid_argument("vielbein dimension mismatch");
  ScalarMat coframe = smat_inverse(frame);
  // sanity: exact two-sided identity
  const Context& ctx = *chart.ctx;
  ScalarMat id = smat_identity(ctx, g.dim());
  if (smat_mul(frame, coframe) != id || smat_mul(coframe, frame) != id)
    throw std::logic_error("vielbein inverse failed");
  return Vielbein{g, std::move(chart), std::move(frame), std::move(coframe)};
}

inline std::vector<Multivector> frame_fields(const Vielbein& v) {
  std::vector<Multivector> out;
  for (int a = 0; a < v.chart.dim(); ++a) {
    Multivector e(v.chart, 1);
    for (int mu = 0; mu < v.chart.dim(); ++mu) e.add_term({mu}, v.frame[a][mu]);
    out.push_back(std::move(e));
  }
  return out;
}

// fhat_{ab}^c = e^c_nu (e_a^mu d_mu e_b^nu - e_b^mu d_mu e_a^nu) must equal f_{ab}^c
inline Report maurer_cartan_check(const Vielbein& v, const LieAlgebraDef& g) {
  Report rep;
  int n = g.dim();
  const Context& ctx = *v.chart.ctx;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar fhat(ctx);
        for (int nu = 0; nu < n; ++nu) {
          Scalar comm(ctx);
          for (int mu = 0; mu < n; ++mu)
            comm = comm + v.frame[a][mu] * v.frame[b][nu].differentiate(v.chart.coords[mu]) -
                   v.frame[b][mu] * v.frame[a][nu].differentiate(v.chart.coords[mu]);
          fhat = fhat + v.coframe[nu][c] * comm;
        }
        Scalar res = fhat - Scalar::constant(ctx, g.f(a, b, c));
        std::string target = g.name() + " [" + std::to_string(a + 1) + "," +
                             std::to_string(b + 1) + "]^" + std::to_string(c + 1);
        rep.add("maurer_cartan", target, res.is_zero(), res.is_zero() ? "" : res.str());
      }
  return rep;
}

// Shipped closed-form frames for the catalog groups (chart coordinates x,y,z[,s]);
// each is validated by maurer_cartan_check in the test suite.
inline Vielbein vielbein_ii(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  auto S = [&](const Rational& c) { return Scalar::constant(ctx, c); };
  ScalarMat f = smat_zero(ctx, 3, 3);
  f[0][0] = S(1);                                            // e1 = dx
  f[1][0] = -Scalar::sym(ctx, ch.coords[2]); f[1][1] = S(1); // e2 = -z dx + dy
  f[2][2] = S(1);                                            // e3 = dz
  return make_vielbein(g, ch, f);
}

inline Vielbein vielbein_iii(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  Scalar y = Scalar::sym(ctx, ch.coords[1]), z = Scalar::sym(ctx, ch.coords[2]);
  ScalarMat f = smat_zero(ctx, 3, 3);
  f[0][0] = Scalar::constant(ctx, 1); f[0][1] = y + z; f[0][2] = y + z;
  f[1][1] = Scalar::constant(ctx, 1);
  f[2][2] = Scalar::constant(ctx, 1);
  return make_vielbein(g, ch, f);
}

inline Vielbein vielbein_iv(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  Scalar y = Scalar::sym(ctx, ch.coords[1]), z = Scalar::sym(ctx, ch.coords[2]);
  ScalarMat f = smat_zero(ctx, 3, 3);
  f[0][0] = Scalar::constant(ctx, 1); f[0][1] = y; f[0][2] = z - y;
  f[1][1] = Scalar::constant(ctx, 1);
  f[2][2] = Scalar::constant(ctx, 1);
  return make_vielbein(g, ch, f);
}

inline Vielbein vielbein_vi0(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  Symbol z = ch.coords[2];
  ScalarMat f = smat_zero(ctx, 3, 3);
  f[0][0] = Scalar::cosh_of(ctx, z);  f[0][1] = -Scalar::sinh_of(ctx, z);
  f[1][0] = -Scalar::sinh_of(ctx, z); f[1][1] = Scalar::cosh_of(ctx, z);
  f[2][2] = Scalar::constant(ctx, 1);
  return make_vielbein(g, ch, f);
}

inline Vielbein vielbein_vii0(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  Symbol z = ch.coords[2];
  ScalarMat f = smat_zero(ctx, 3, 3);
  f[0][0] = Scalar::cos_of(ctx, z, 1); f[0][1] = Scalar::sin_of(ctx, z, 1);
  f[1][0] = -Scalar::sin_of(ctx, z, 1); f[1][1] = Scalar::cos_of(ctx, z, 1);
  f[2][2] = Scalar::constant(ctx, 1);
  return make_vielbein(g, ch, f);
}

// central extension chart (x,y,z,s) with e4 = ds
inline Vielbein vielbein_ii_r(const LieAlgebraDef& g, Context& ctx) {
  Chart ch = make_chart(ctx, {"x", "y", "z", "s"});
  ScalarMat f = smat_zero(ctx, 4, 4);
  f[0][0] = Scalar::constant(ctx, 1);
  f[1][0] = -Scalar::sym(ctx, ch.coords[2]); f[1][1] = Scalar::constant(ctx, 1);
  f[2][2] = Scalar::constant(ctx, 1);
  f[3][3] = Scalar::constant(ctx, 1);
  return make_vielbein(g, ch, f);
}

}  // namespace bihamil
