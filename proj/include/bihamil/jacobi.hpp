#pragma once
#include "liealgebra.hpp"
#include "parser.hpp"

namespace bihamil {

// (Lambda, E) with constant entries in the generator basis; entries may carry
// parameter symbols.
struct AlgebraJacobi {
  LieAlgebraDef algebra;
  const Context* ctx;
  ScalarMat lambda;        // n x n, antisymmetric
  std::vector<Scalar> e;   // n components
};

inline AlgebraJacobi make_algebra_jacobi(const LieAlgebraDef& g, const Context& ctx,
                                         ScalarMat lambda, std::vector<Scalar> e) {
  int n = g.dim();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(e.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(lambda[i][j] + lambda[j][i]).is_zero())
        throw std::invalid_argument("lambda must be antisymmetric");
  return AlgebraJacobi{g, &ctx, std::move(lambda), std::move(e)};
}

// Jacobi equations in matrix form over the adjoint representations:
//   -(L^{ce} chi_c^T L + L Y^e L + (L chi_b) L^{be} + E^e L)^{fh}
//     + E^f L^{eh} + L^{fe} E^h = 0   for all (e,f,h)
//   sum_a (L chi_a - (L chi_a)^T) E^a = 0
inline Report check_algebra_jacobi(const AlgebraJacobi& j) {
  Report rep;
  const Context& ctx = *j.ctx;
  const auto& g = j.algebra;
  int n = g.dim();
  auto ar = adjoint_reps(g);
  std::vector<ScalarMat> chi, yrep;
  for (int a = 0; a < n; ++a) chi.push_back(smat_from_rat(ctx, ar.chi[a]));
  for (int c = 0; c < n; ++c) yrep.push_back(smat_from_rat(ctx, ar.yrep[c]));
  const ScalarMat& L = j.lambda;

  for (int e = 0; e < n; ++e) {
    ScalarMat m = smat_zero(ctx, n, n);
    for (int c = 0; c < n; ++c) {
      ScalarMat t = smat_mul(smat_transpose(chi[c]), L);
      for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) m[f][h] = m[f][h] + L[c][e] * t[f][h];
    }
    ScalarMat lyl = smat_mul(smat_mul(L, yrep[e]), L);
    for (int b = 0; b < n; ++b) {
      ScalarMat t = smat_mul(L, chi[b]);
      for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) m[f][h] = m[f][h] + t[f][h] * L[b][e];
    }
    std::string bad;
    bool pass = true;
    for (int f = 0; f < n; ++f)
      for (int h = 0; h < n; ++h) {
        Scalar res = -(m[f][h] + lyl[f][h] + j.e[e] * L[f][h]) + j.e[f] * L[e][h] +
                     L[f][e] * j.e[h];
        if (!res.is_zero()) {
          pass = false;
          if (!bad.empty()) bad += "; ";
          bad += "(" + std::to_string(f + 1) + "," + std::to_string(h + 1) + ")=" + res.str();
        }
      }
    rep.add("jacobi_eq_tensor[e=" + std::to_string(e + 1) + "]", g.name(), pass, bad);
  }

  ScalarMat m16 = smat_zero(ctx, n, n);
  for (int a = 0; a < n; ++a) {
    ScalarMat t = smat_mul(L, chi[a]);
    ScalarMat tt = smat_transpose(t);
    for (int f = 0; f < n; ++f)
      for (int h = 0; h < n; ++h) m16[f][h] = m16[f][h] + (t[f][h] - tt[f][h]) * j.e[a];
  }
  std::string bad;
  bool pass = true;
  for (int f = 0; f < n; ++f)
    for (int h = 0; h < n; ++h)
      if (!m16[f][h].is_zero()) {
        pass = false;
        if (!bad.empty()) bad += "; ";
        bad += "(" + std::to_string(f + 1) + "," + std::to_string(h + 1) + ")=" +
               m16[f][h].str();
      }
  rep.add("jacobi_eq_reeb", g.name(), pass, bad);
  return rep;
}

// (Lambda, E) as fields on the group chart
struct GroupJacobi {
  Chart chart;
  Multivector lambda;  // grade 2
  Multivector e;       // grade 1
};

// Tensor Jacobi equations: schouten(L,L) - 2 wedge(E,L) = 0 and L_E L = 0.
inline Report check_group_jacobi(const GroupJacobi& j, const std::string& target = "") {
  Report rep;
  Multivector r1 = schouten(j.lambda, j.lambda) - Rational(2) * wedge(j.e, j.lambda);
  rep.add("jacobi_defining_identity", target, r1.is_zero(), r1.is_zero() ? "" : r1.str());
  Multivector r2 = schouten(j.e, j.lambda);
  rep.add("jacobi_reeb_invariance", target, r2.is_zero(), r2.is_zero() ? "" : r2.str());
  return rep;
}

// Push the constant data through the vielbein: L^{mu nu} = e_a^mu e_b^nu L^{ab}.
inline GroupJacobi push_to_group(const AlgebraJacobi& j, const Vielbein& v) {
  if (j.algebra.dim() != v.algebra.dim() || j.algebra.name() != v.algebra.name())
    throw std::invalid_argument("vielbein/algebra mismatch");
  auto frames = frame_fields(v);
  Multivector lam(v.chart, 2), e(v.chart, 1);
  int n = j.algebra.dim();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b)
      if (!j.lambda[a][b].is_zero()) lam = lam + j.lambda[a][b] * wedge(frames[a], frames[b]);
    if (!j.e[a].is_zero()) e = e + j.e[a] * frames[a];
  }
  return GroupJacobi{v.chart, std::move(lam), std::move(e)};
}

// L' = A^T L A, E'^e = E^b A_b^e
inline AlgebraJacobi automorphism_act(const AlgebraJacobi& j, const RatMat& a) {
  instantiate_automorphism(j.algebra, a);
  const Context& ctx = *j.ctx;
  ScalarMat am = smat_from_rat(ctx, a);
  ScalarMat lam = smat_mul(smat_mul(smat_transpose(am), j.lambda), am);
  int n = j.algebra.dim();
  std::vector<Scalar> e(n, Scalar(ctx));
  for (int col = 0; col < n; ++col)
    for (int b = 0; b < n; ++b) e[col] = e[col] + j.e[b] * Scalar::constant(ctx, a[b][col]);
  return AlgebraJacobi{j.algebra, j.ctx, std::move(lam), std::move(e)};
}

// Bounded brute-force search for an automorphism relating two constant Jacobi
// structures.  A miss means "not found within bound", never "inequivalent".
inline std::optional<RatMat> find_equivalence(const AlgebraJacobi& a, const AlgebraJacobi& b,
                                              int bound = 1) {
  int n = a.algebra.dim();
  if (n != 3) throw std::invalid_argument("equivalence search implemented for dim 3");
  int w = 2 * bound + 1;
  long total = 1;
  for (int i = 0; i < 9; ++i) total *= w;
  for (long code = 0; code < total; ++code) {
    long c = code;
    RatMat m(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m[i][j] = Rational(static_cast<long>(c % w) - bound);
        c /= w;
      }
    if (!is_automorphism(a.algebra, m)) continue;
    AlgebraJacobi t = automorphism_act(a, m);
    bool ok = t.lambda == b.lambda;
    for (int i = 0; ok && i < 3; ++i) ok = t.e[i] == b.e[i];
    if (ok) return m;
  }
  return std::nullopt;
}

// --- embedded catalog --------------------------------------------------------

struct JacobiCatalogEntry {
  std::string label;        // e.g. "II.1"
  Rational l12, l13, l23;   // family parameters of the representative
  AlgebraJacobi algebra_level;
  GroupJacobi group_level;  // catalog column, stored verbatim
  Multivector poisson_column;  // catalog column on the (x,y,z,s) chart, verbatim
};

struct JacobiCatalogRow {
  std::string group;
  AlgebraJacobi family;              // in parameters lam12, lam13, lam23
  std::vector<Scalar> side_nonzero;  // admissibility: each expression must be nonzero
  std::string side_text;
  Vielbein vielbein;
  std::vector<JacobiCatalogEntry> entries;
};

namespace detail {

template <typename T>
std::vector<T> family_e(const std::string& group, const T& l12, const T& l13, const T& l23,
                        const T& zero) {
  if (group == "II") return {-l23, zero, zero};
  if (group == "III") return {zero, l13 - l12, -(l13 - l12)};
  if (group == "IV") return {zero, -l12, -(l12 + l13)};
  if (group == "VI0") return {-l23, -l13, zero};
  if (group == "VII0") return {-l23, l13, zero};
  throw std::invalid_argument("unknown group: " + group);
}

inline AlgebraJacobi family_instance(const LieAlgebraDef& g, const std::string& group,
                                     Context& ctx, const Scalar& l12, const Scalar& l13,
                                     const Scalar& l23) {
  ScalarMat lam = smat_zero(ctx, 3, 3);
  lam[0][1] = l12; lam[1][0] = -l12;
  lam[0][2] = l13; lam[2][0] = -l13;
  lam[1][2] = l23; lam[2][1] = -l23;
  auto e = family_e<Scalar>(group, l12, l13, l23, Scalar(ctx));
  return make_algebra_jacobi(g, ctx, std::move(lam), std::move(e));
}

using CompSpec = std::vector<std::pair<std::vector<int>, const char*>>;

inline Multivector build_mv(const Chart& ch, int grade, const CompSpec& spec) {
  Multivector m(ch, grade);
  Context& ctx = const_cast<Context&>(*ch.ctx);
  for (const auto& [idx, txt] : spec) m.add_term(idx, parse_scalar(txt, ctx));
  return m;
}

}  // namespace detail

// The five rows of the classification: parametric family, admissibility side
// conditions, representatives at algebra and group level, and the Poisson
// structures on G x R.  Group and Poisson columns are embedded verbatim (two
// misprints in the source table are corrected; the IV-row check reports both
// candidate readings).
inline std::vector<JacobiCatalogRow> jacobi_catalog(Context& ctx) {
  using detail::CompSpec;
  Scalar p12 = Scalar::sym(ctx, ctx.parameter("lam12"));
  Scalar p13 = Scalar::sym(ctx, ctx.parameter("lam13"));
  Scalar p23 = Scalar::sym(ctx, ctx.parameter("lam23"));

  struct EntrySpec {
    const char* label;
    int l12, l13, l23;
    CompSpec group_lambda;
    CompSpec group_e;
    CompSpec poisson;
  };
  struct RowSpec {
    const char* group;
    LieAlgebraDef algebra;
    Vielbein (*vb)(const LieAlgebraDef&, Context&);
    std::vector<Scalar> side;
    const char* side_text;
    std::vector<EntrySpec> entries;
  };

  std::vector<RowSpec> rows;
  rows.push_back(
      {"II", lie_ii(), &vielbein_ii, {p23}, "lam23 != 0",
       {{"1", 0, 0, 1,
         {{{0, 2}, "-z"}, {{1, 2}, "1"}},
         {{{0}, "-1"}},
         {{{0, 2}, "-z*exp(-s)"}, {{1, 2}, "exp(-s)"}, {{0, 3}, "exp(-s)"}}},
        {"2", 0, 1, 1,
         {{{0, 2}, "1-z"}, {{1, 2}, "1"}},
         {{{0}, "-1"}},
         {{{0, 2}, "(1-z)*exp(-s)"}, {{1, 2}, "exp(-s)"}, {{0, 3}, "exp(-s)"}}},
        {"3", 1, 0, 1,
         {{{0, 1}, "1"}, {{0, 2}, "-z"}, {{1, 2}, "1"}},
         {{{0}, "-1"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "-z*exp(-s)"}, {{1, 2}, "exp(-s)"},
          {{0, 3}, "exp(-s)"}}},
        {"4", 1, 1, 1,
         {{{0, 1}, "1"}, {{0, 2}, "1-z"}, {{1, 2}, "1"}},
         {{{0}, "-1"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "(1-z)*exp(-s)"}, {{1, 2}, "exp(-s)"},
          {{0, 3}, "exp(-s)"}}}}});
  rows.push_back(
      {"III", lie_iii(), &vielbein_iii, {p12 - p13, p12 + p13}, "lam12 != +-lam13",
       {{"1", 0, 1, 0,
         {{{0, 2}, "1"}, {{1, 2}, "y+z"}},
         {{{1}, "1"}, {{2}, "-1"}},
         {{{0, 2}, "exp(-s)"}, {{1, 2}, "(y+z)*exp(-s)"}, {{1, 3}, "-exp(-s)"},
          {{2, 3}, "exp(-s)"}}},
        {"2", 1, 0, 0,
         {{{0, 1}, "1"}, {{1, 2}, "-(y+z)"}},
         {{{1}, "-1"}, {{2}, "1"}},
         {{{0, 1}, "exp(-s)"}, {{1, 2}, "-(y+z)*exp(-s)"}, {{1, 3}, "exp(-s)"},
          {{2, 3}, "-exp(-s)"}}},
        {"3", 0, 1, 1,
         {{{0, 2}, "1"}, {{1, 2}, "y+z+1"}},
         {{{1}, "1"}, {{2}, "-1"}},
         {{{0, 2}, "exp(-s)"}, {{1, 2}, "(y+z+1)*exp(-s)"}, {{1, 3}, "-exp(-s)"},
          {{2, 3}, "exp(-s)"}}},
        {"4", 1, 0, 1,
         {{{0, 1}, "1"}, {{1, 2}, "-(y+z-1)"}},
         {{{1}, "-1"}, {{2}, "1"}},
         {{{0, 1}, "exp(-s)"}, {{1, 2}, "-(y+z-1)*exp(-s)"}, {{1, 3}, "exp(-s)"},
          {{2, 3}, "-exp(-s)"}}}}});
  rows.push_back(
      {"IV", lie_iv(), &vielbein_iv, {p12}, "lam12 != 0",
       {{"1", 1, 0, 0,
         {{{0, 1}, "1"}, {{1, 2}, "y-z"}},
         {{{1}, "-1"}, {{2}, "-1"}},
         {{{0, 1}, "exp(-s)"}, {{1, 2}, "(y-z)*exp(-s)"}, {{1, 3}, "exp(-s)"},
          {{2, 3}, "exp(-s)"}}},
        {"2", 1, 0, 1,
         {{{0, 1}, "1"}, {{1, 2}, "y-z+1"}},
         {{{1}, "-1"}, {{2}, "-1"}},
         {{{0, 1}, "exp(-s)"}, {{1, 2}, "(y-z+1)*exp(-s)"}, {{1, 3}, "exp(-s)"},
          {{2, 3}, "exp(-s)"}}},
        {"3", 1, 1, 0,
         {{{0, 1}, "1"}, {{0, 2}, "1"}, {{1, 2}, "2*y-z"}},
         {{{1}, "-1"}, {{2}, "-2"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "exp(-s)"}, {{1, 2}, "(2*y-z)*exp(-s)"},
          {{1, 3}, "exp(-s)"}, {{2, 3}, "2*exp(-s)"}}},
        {"4", 1, 1, 1,
         {{{0, 1}, "1"}, {{0, 2}, "1"}, {{1, 2}, "2*y-z+1"}},
         {{{1}, "-1"}, {{2}, "-2"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "exp(-s)"}, {{1, 2}, "(2*y-z+1)*exp(-s)"},
          {{1, 3}, "exp(-s)"}, {{2, 3}, "2*exp(-s)"}}}}});
  rows.push_back(
      {"VI0", lie_vi0(), &vielbein_vi0, {p13 - p23, p13 + p23}, "lam13 != +-lam23",
       {{"1", 0, 1, 0,
         {{{0, 2}, "cosh(z)"}, {{1, 2}, "-sinh(z)"}},
         {{{0}, "sinh(z)"}, {{1}, "-cosh(z)"}},
         {{{0, 2}, "exp(-s)*cosh(z)"}, {{1, 2}, "-exp(-s)*sinh(z)"},
          {{0, 3}, "-exp(-s)*sinh(z)"}, {{1, 3}, "exp(-s)*cosh(z)"}}},
        {"2", 0, 0, 1,
         {{{0, 2}, "-sinh(z)"}, {{1, 2}, "cosh(z)"}},
         {{{0}, "-cosh(z)"}, {{1}, "sinh(z)"}},
         {{{0, 2}, "-exp(-s)*sinh(z)"}, {{1, 2}, "exp(-s)*cosh(z)"},
          {{0, 3}, "exp(-s)*cosh(z)"}, {{1, 3}, "-exp(-s)*sinh(z)"}}},
        {"3", 1, 1, 0,
         {{{0, 1}, "1"}, {{0, 2}, "cosh(z)"}, {{1, 2}, "-sinh(z)"}},
         {{{0}, "sinh(z)"}, {{1}, "-cosh(z)"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "exp(-s)*cosh(z)"}, {{1, 2}, "-exp(-s)*sinh(z)"},
          {{0, 3}, "-exp(-s)*sinh(z)"}, {{1, 3}, "exp(-s)*cosh(z)"}}},
        {"4", 1, 0, 1,
         {{{0, 1}, "1"}, {{0, 2}, "-sinh(z)"}, {{1, 2}, "cosh(z)"}},
         {{{0}, "-cosh(z)"}, {{1}, "sinh(z)"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "-exp(-s)*sinh(z)"}, {{1, 2}, "exp(-s)*cosh(z)"},
          {{0, 3}, "exp(-s)*cosh(z)"}, {{1, 3}, "-exp(-s)*sinh(z)"}}}}});
  rows.push_back(
      {"VII0", lie_vii0(), &vielbein_vii0, {p13 * p13 + p23 * p23},
       "lam13^2 + lam23^2 != 0",
       {{"1", 0, 0, 1,
         {{{0, 2}, "-sin(z)"}, {{1, 2}, "cos(z)"}},
         {{{0}, "-cos(z)"}, {{1}, "-sin(z)"}},
         {{{0, 2}, "-exp(-s)*sin(z)"}, {{1, 2}, "exp(-s)*cos(z)"},
          {{0, 3}, "exp(-s)*cos(z)"}, {{1, 3}, "exp(-s)*sin(z)"}}},
        {"2", 0, 1, 0,
         {{{0, 2}, "cos(z)"}, {{1, 2}, "sin(z)"}},
         {{{0}, "-sin(z)"}, {{1}, "cos(z)"}},
         {{{0, 2}, "exp(-s)*cos(z)"}, {{1, 2}, "exp(-s)*sin(z)"},
          {{0, 3}, "exp(-s)*sin(z)"}, {{1, 3}, "-exp(-s)*cos(z)"}}},
        {"3", 0, 1, 1,
         {{{0, 2}, "cos(z)-sin(z)"}, {{1, 2}, "sin(z)+cos(z)"}},
         {{{0}, "-sin(z)-cos(z)"}, {{1}, "cos(z)-sin(z)"}},
         {{{0, 2}, "exp(-s)*(cos(z)-sin(z))"}, {{1, 2}, "exp(-s)*(sin(z)+cos(z))"},
          {{0, 3}, "exp(-s)*(sin(z)+cos(z))"}, {{1, 3}, "-exp(-s)*(cos(z)-sin(z))"}}},
        {"4", 1, 0, 1,
         {{{0, 1}, "1"}, {{0, 2}, "-sin(z)"}, {{1, 2}, "cos(z)"}},
         {{{0}, "-cos(z)"}, {{1}, "-sin(z)"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "-exp(-s)*sin(z)"}, {{1, 2}, "exp(-s)*cos(z)"},
          {{0, 3}, "exp(-s)*cos(z)"}, {{1, 3}, "exp(-s)*sin(z)"}}},
        {"5", 1, 1, 0,
         {{{0, 1}, "1"}, {{0, 2}, "cos(z)"}, {{1, 2}, "sin(z)"}},
         {{{0}, "-sin(z)"}, {{1}, "cos(z)"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "exp(-s)*cos(z)"}, {{1, 2}, "exp(-s)*sin(z)"},
          {{0, 3}, "exp(-s)*sin(z)"}, {{1, 3}, "-exp(-s)*cos(z)"}}},
        {"6", 1, 1, 1,
         {{{0, 1}, "1"}, {{0, 2}, "cos(z)-sin(z)"}, {{1, 2}, "sin(z)+cos(z)"}},
         {{{0}, "-sin(z)-cos(z)"}, {{1}, "cos(z)-sin(z)"}},
         {{{0, 1}, "exp(-s)"}, {{0, 2}, "exp(-s)*(cos(z)-sin(z))"},
          {{1, 2}, "exp(-s)*(sin(z)+cos(z))"}, {{0, 3}, "exp(-s)*(sin(z)+cos(z))"},
          {{1, 3}, "-exp(-s)*(cos(z)-sin(z))"}}}}});

  Chart chart4 = make_chart(ctx, {"x", "y", "z", "s"});
  std::vector<JacobiCatalogRow> out;
  for (auto& r : rows) {
    Vielbein vb = r.vb(r.algebra, ctx);
    AlgebraJacobi fam = detail::family_instance(r.algebra, r.group, ctx, p12, p13, p23);
    std::vector<JacobiCatalogEntry> entries;
    for (const auto& es : r.entries) {
      auto C = [&](int v) { return Scalar::constant(ctx, v); };
      AlgebraJacobi aj =
          detail::family_instance(r.algebra, r.group, ctx, C(es.l12), C(es.l13), C(es.l23));
      GroupJacobi gj{vb.chart, detail::build_mv(vb.chart, 2, es.group_lambda),
                     detail::build_mv(vb.chart, 1, es.group_e)};
      Multivector p = detail::build_mv(chart4, 2, es.poisson);
      entries.push_back(JacobiCatalogEntry{std::string(r.group) + "." + es.label,
                                           Rational(es.l12), Rational(es.l13),
                                           Rational(es.l23), std::move(aj), std::move(gj),
                                           std::move(p)});
    }
    out.push_back(JacobiCatalogRow{r.group, std::move(fam), r.side, r.side_text,
                                   std::move(vb), std::move(entries)});
  }
  return out;
}

}  // namespace bihamil
