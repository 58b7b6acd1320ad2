#pragma once
#include "jacobi.hpp"

namespace bihamil {

struct PoissonBivector {
  Chart chart;        // includes the extra coordinate s
  Multivector field;  // grade 2
};

// P = e^{-s} (Lambda + ds ^ E) on the chart extended by s.
inline PoissonBivector poissonize(const GroupJacobi& j) {
  Context& ctx = const_cast<Context&>(*j.chart.ctx);
  for (Symbol c : j.chart.coords)
    if (ctx.name(c) == "s") throw std::invalid_argument("chart already contains s");
  Chart ext = j.chart;
  ext.coords.push_back(ctx.coordinate("s"));
  int n = j.chart.dim();
  Scalar es = Scalar::exp_of(ctx, ext.coords[n], -1);
  Multivector p(ext, 2);
  for (const auto& [idx, v] : j.lambda.components()) p.add_term(idx, es * v);
  for (const auto& [idx, v] : j.e.components()) p.add_term({n, idx[0]}, es * v);
  return PoissonBivector{std::move(ext), std::move(p)};
}

inline Report check_poisson(const Multivector& p, const std::string& target = "") {
  Report rep;
  Multivector r = schouten(p, p);
  rep.add("poisson_schouten_self", target, r.is_zero(), r.is_zero() ? "" : r.str());
  return rep;
}

// Pairwise Schouten brackets; entry (i,j) with i <= j.
struct CompatEntry {
  int i, j;
  bool zero;
  std::string residual;
};

inline std::vector<CompatEntry> compat_matrix(const std::vector<Multivector>& ps) {
  std::vector<CompatEntry> out;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i; j < ps.size(); ++j) {
      Multivector r = schouten(ps[i], ps[j]);
      out.push_back({static_cast<int>(i), static_cast<int>(j), r.is_zero(),
                     r.is_zero() ? "" : r.str()});
    }
  return out;
}

struct DarbouxMap {
  std::vector<Scalar> qs;
  std::vector<Scalar> ps;
};

inline int float_rank(std::vector<std::vector<double>> m, double tol = 1e-9) {
  int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    for (int r = rank + 1; r < rows; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) < tol) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      double f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// {q_i,q_j} = {p_i,p_j} = 0, {q_i,p_j} = delta_ij, plus functional independence
// via float Jacobian rank at random rational points.
inline Report verify_darboux(const DarbouxMap& m, const PoissonBivector& p, Rng& rng,
                             const std::string& target = "", int npoints = 3) {
  Report rep;
  size_t n = m.qs.size();
  if (m.ps.size() != n || 2 * n != static_cast<size_t>(p.chart.dim()))
    throw std::invalid_argument("wrong count of functions");
  auto record = [&](const std::string& what, const Scalar& got, const Scalar& want) {
    Scalar res = got - want;
    rep.add(what, target, res.is_zero(), res.is_zero() ? "" : res.str());
  };
  const Context& ctx = *p.chart.ctx;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
      if (i < j) {
        record("darboux{q" + si + ",q" + sj + "}",
               poisson_bracket(m.qs[i], m.qs[j], p.field), Scalar(ctx));
        record("darboux{p" + si + ",p" + sj + "}",
               poisson_bracket(m.ps[i], m.ps[j], p.field), Scalar(ctx));
      }
      record("darboux{q" + std::to_string(i + 1) + ",p" + std::to_string(j + 1) + "}",
             poisson_bracket(m.qs[i], m.ps[j], p.field),
             Scalar::constant(ctx, i == j ? 1 : 0));
    }
  // independence: rank of the 2n x 2n Jacobian at random points
  std::vector<Scalar> fns = m.qs;
  fns.insert(fns.end(), m.ps.begin(), m.ps.end());
  int full = 0;
  for (int pt = 0; pt < npoints; ++pt) {
    std::map<Symbol, Rational> at;
    for (Symbol c : p.chart.coords) at[c] = rng.rational(2, 3);
    std::vector<std::vector<double>> jac;
    for (const auto& f : fns) {
      std::vector<double> row;
      for (Symbol c : p.chart.coords) row.push_back(f.differentiate(c).evaluate_double(at));
      jac.push_back(std::move(row));
    }
    if (float_rank(jac) == static_cast<int>(2 * n)) ++full;
  }
  rep.add("darboux_independence", target, full == npoints,
          full == npoints ? "" : "rank deficiency at sampled points");
  return rep;
}

// --- constant Poisson structures on the central extension --------------------

struct ConstantPoissonAnsatz {
  LieAlgebraDef algebra;
  const Context* ctx;
  ScalarMat entries;  // antisymmetric, parameters p_ij above the diagonal
};

inline ConstantPoissonAnsatz constant_ansatz(const LieAlgebraDef& g, Context& ctx) {
  int n = g.dim();
  ScalarMat m = smat_zero(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar p = Scalar::sym(
          ctx, ctx.parameter("p" + std::to_string(i + 1) + std::to_string(j + 1)));
      m[i][j] = p;
      m[j][i] = -p;
    }
  return ConstantPoissonAnsatz{g, &ctx, std::move(m)};
}

// E = 0 reduction of the matrix Jacobi equations:
//   P^{ce} chi_c^T P + P Y^e P + (P chi_b) P^{be} = 0 for each e.
// Returns the distinct nonzero polynomial entries.
inline std::vector<Scalar> generate_constant_constraints(const ConstantPoissonAnsatz& a) {
  const Context& ctx = *a.ctx;
  const auto& g = a.algebra;
  int n = g.dim();
  auto ar = adjoint_reps(g);
  std::vector<ScalarMat> chi, yrep;
  for (int c = 0; c < n; ++c) chi.push_back(smat_from_rat(ctx, ar.chi[c]));
  for (int c = 0; c < n; ++c) yrep.push_back(smat_from_rat(ctx, ar.yrep[c]));
  const ScalarMat& P = a.entries;
  std::vector<Scalar> out;
  auto push_unique = [&](const Scalar& v) {
    if (v.is_zero()) return;
    for (const auto& o : out)
      if (o == v || o == -v) return;
    out.push_back(v);
  };
  for (int e = 0; e < n; ++e) {
    ScalarMat m = smat_mul(smat_mul(P, yrep[e]), P);
    for (int c = 0; c < n; ++c) {
      ScalarMat t = smat_mul(smat_transpose(chi[c]), P);
      for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) m[f][h] = m[f][h] + P[c][e] * t[f][h];
    }
    for (int b = 0; b < n; ++b) {
      ScalarMat t = smat_mul(P, chi[b]);
      for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) m[f][h] = m[f][h] + t[f][h] * P[b][e];
    }
    for (int f = 0; f < n; ++f)
      for (int h = 0; h < n; ++h) push_unique(m[f][h]);
  }
  return out;
}

// P' = A^T P A for a constant antisymmetric matrix
inline RatMat poisson_automorphism_act(const LieAlgebraDef& g, const RatMat& p,
                                       const RatMat& a) {
  instantiate_automorphism(g, a);
  return rmat_mul(rmat_mul(rmat_transpose(a), p), a);
}

inline Rational rat_pfaffian4(const RatMat& p) {
  return p[0][1] * p[2][3] - p[0][2] * p[1][3] + p[0][3] * p[1][2];
}

// The automorphism carrying the generic p23 = 0 solution to the first class
// representative (p12, p34, p13, p24, p14) = (1, 1, 0, 1, 1).  Free entries a21,
// a24, a31, a32; the remaining ones are forced.  Admissibility: p24 != 0,
// a32 != 0, and Delta = p12 p34 - p13 p24 != 0.
struct Class1Params {
  Rational p12, p13, p14, p24, p34;  // generic solution entries (p23 = 0)
  Rational a21, a24, a31, a32;       // free automorphism entries
};

inline RatMat class1_automorphism(const Class1Params& v) {
  const Rational &p12 = v.p12, &p13 = v.p13, &p14 = v.p14, &p24 = v.p24, &p34 = v.p34;
  const Rational& a32 = v.a32;
  Rational delta = p12 * p34 - p13 * p24;
  if (delta == 0 || p24 == 0 || a32 == 0)
    throw std::invalid_argument("inadmissible class-1 parameters");
  Rational a32sq = a32 * a32;
  Rational a22 = (-a32sq * a32 * p12 * p34 * p34 + a32sq * a32 * p13 * p24 * p34 +
                  p24 * p24) /
                 (p24 * a32sq * delta);
  Rational a23 = p24 / (a32sq * delta);
  Rational a34 = -((delta * (v.a21 * p24 + v.a31 * p34) * a32sq - a32 * p14 * p24 -
                    p24 * p24) *
                   a32) /
                 (p24 * p24);
  RatMat a = {{-p24 / (a32 * delta), 0, 0, 0},
              {v.a21, a22, a23, v.a24},
              {v.a31, a32, 0, a34},
              {-p12 / (a32 * delta), 0, 0, a32sq * delta / (p24 * p24)}};
  return instantiate_automorphism(lie_ii_r(), a);
}

// --- the twelve constant representatives -------------------------------------

struct ConstantRep {
  std::string label;
  RatMat p;               // antisymmetric 4x4 on the generator basis
  Multivector group_form; // push through the extension vielbein, chart (x,y,z,s)
};

inline RatMat constant_rep_matrix(const Rational& p12, const Rational& p34,
                                  const Rational& p13, const Rational& p24,
                                  const Rational& p14) {
  RatMat m(4, std::vector<Rational>(4, Rational(0)));
  m[0][1] = p12; m[1][0] = -p12;
  m[0][2] = p13; m[2][0] = -p13;
  m[0][3] = p14; m[3][0] = -p14;
  m[2][3] = p34; m[3][2] = -p34;
  m[1][3] = p24; m[3][1] = -p24;
  return m;
}

inline std::vector<ConstantRep> constant_rep_catalog(Context& ctx) {
  // (p12, p34, p13, p24, p14) per class
  static const int vals[12][5] = {{1, 1, 0, 1, 1}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 0},
                                  {1, 1, 0, 0, 1}, {1, 1, 1, 0, 1}, {1, 1, 0, 0, 0},
                                  {0, 0, 1, 1, 0}, {1, 0, 1, 1, 0}, {0, 1, 1, 1, 0},
                                  {0, 0, 1, 1, 1}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}};
  Vielbein vb = vielbein_ii_r(lie_ii_r(), ctx);
  auto frames = frame_fields(vb);
  std::vector<ConstantRep> out;
  for (int k = 0; k < 12; ++k) {
    RatMat m = constant_rep_matrix(Rational(vals[k][0]), Rational(vals[k][1]),
                                   Rational(vals[k][2]), Rational(vals[k][3]),
                                   Rational(vals[k][4]));
    Multivector f(vb.chart, 2);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (m[a][b] != 0)
          f = f + Scalar::constant(ctx, m[a][b]) * wedge(frames[a], frames[b]);
    out.push_back(ConstantRep{"P'" + std::to_string(k + 1), std::move(m), std::move(f)});
  }
  return out;
}

// --- incompatibility witness -------------------------------------------------

// Poissonizations of the same constant Jacobi data pushed through two different
// group structures: a nonzero bracket component with one index on s.
struct IncompatWitness {
  std::string description;
  std::vector<int> index;   // component of [P1, P2] on the (x,y,z,s) chart
  Scalar component;
  Multivector bracket;
};

inline IncompatWitness incompat_witness(Context& ctx) {
  // shared algebra data: Lambda = X2 ^ X3, E = -X1
  auto build = [&](const LieAlgebraDef& g, Vielbein (*vbf)(const LieAlgebraDef&, Context&)) {
    Vielbein vb = vbf(g, ctx);
    ScalarMat lam = smat_zero(ctx, 3, 3);
    lam[1][2] = Scalar::constant(ctx, 1);
    lam[2][1] = Scalar::constant(ctx, -1);
    std::vector<Scalar> e = {Scalar::constant(ctx, -1), Scalar(ctx), Scalar(ctx)};
    return poissonize(push_to_group(make_algebra_jacobi(g, ctx, lam, e), vb));
  };
  PoissonBivector p1 = build(lie_ii(), &vielbein_ii);
  PoissonBivector p2 = build(lie_vi0(), &vielbein_vi0);
  Multivector br = schouten(p1.field, p2.field);
  std::vector<int> idx = {0, 1, 3};  // (x, y, s)
  return IncompatWitness{
      "same constant Jacobi data (X2^X3, -X1) Poissonized on the II and VI0 groups", idx,
      br.component(idx), std::move(br)};
}

}  // namespace bihamil
