#pragma once
#include "poisson.hpp"

namespace bihamil {

// First-order differential operators X_i = sum_k c_i^k(q1,q2) d/dq_k realizing
// the algebra's commutators on the plane.
struct Realization {
  LieAlgebraDef algebra;
  Chart chart;                      // (q1, q2)
  std::vector<Multivector> gens;    // grade 1, one per generator
};

inline Report check_realization(const Realization& r) {
  Report rep;
  const auto& g = r.algebra;
  const Context& ctx = *r.chart.ctx;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      Multivector want(r.chart, 1);
      for (int c = 0; c < g.dim(); ++c)
        want = want + Scalar::constant(ctx, g.f(a, b, c)) * r.gens[c];
      Multivector res = schouten(r.gens[a], r.gens[b]) - want;
      std::string target = g.name() + " [" + std::to_string(a + 1) + "," +
                           std::to_string(b + 1) + "]";
      rep.add("realization_bracket", target, res.is_zero(), res.is_zero() ? "" : res.str());
    }
  return rep;
}

// The shipped plane realizations for the five catalog algebras.
inline std::vector<Realization> realization_catalog(Context& ctx) {
  Chart q = make_chart(ctx, {"q1", "q2"});
  auto build = [&](const LieAlgebraDef& g,
                   const std::vector<std::vector<const char*>>& rows) {
    std::vector<Multivector> gens;
    for (const auto& row : rows) {
      Multivector v(q, 1);
      for (int k = 0; k < 2; ++k) v.add_term({k}, parse_scalar(row[k], ctx));
      gens.push_back(std::move(v));
    }
    Realization r{g, q, std::move(gens)};
    Report rep = check_realization(r);
    if (!rep.all_pass()) throw std::logic_error("realization fails commutators: " + g.name());
    return r;
  };
  std::vector<Realization> out;
  out.push_back(build(lie_ii(), {{"1", "0"}, {"0", "1"}, {"q2", "0"}}));
  out.push_back(build(lie_iii(), {{"q1+q2", "q1+q2"}, {"1", "0"}, {"0", "1"}}));
  out.push_back(build(lie_iv(), {{"-q1*(q2-1)", "-q2^2"}, {"1", "0"}, {"q2", "0"}}));
  out.push_back(build(lie_vi0(), {{"1", "0"}, {"0", "1"}, {"q2", "q1"}}));
  out.push_back(build(lie_vii0(), {{"1", "0"}, {"0", "1"}, {"q2", "-q1"}}));
  return out;
}

// Phase-space chart (q1, q2, p1, p2) with the canonical bivector.
inline Chart phase_chart(Context& ctx) { return make_chart(ctx, {"q1", "q2", "p1", "p2"}); }

inline Multivector canonical_bivector(const Chart& phase) {
  Multivector p(phase, 2);
  const Context& ctx = *phase.ctx;
  p.add_term({0, 2}, Scalar::constant(ctx, 1));
  p.add_term({1, 3}, Scalar::constant(ctx, 1));
  return p;
}

// Momentum substitution c(q) d/dq_k -> -c(q) p_k turning operators into
// phase-space functions.
inline std::vector<Scalar> momentum_substitute(const Realization& r) {
  Context& ctx = const_cast<Context&>(*r.chart.ctx);
  Chart phase = phase_chart(ctx);
  std::vector<Scalar> out;
  for (const auto& gen : r.gens) {
    Scalar f(ctx);
    for (int k = 0; k < 2; ++k)
      f = f - gen.component({k}) * Scalar::sym(ctx, phase.coords[2 + k]);
    out.push_back(std::move(f));
  }
  return out;
}

struct HamiltonianSystem {
  PoissonBivector p;
  DarbouxMap darboux;
  std::vector<Scalar> s;          // symmetry functions on the group chart
  Scalar h;
  std::vector<Scalar> invariants; // H first, then the commuting S_k
};

struct BuildResult {
  HamiltonianSystem sys;
  Report report;
};

// Assemble the system: Poissonize, verify the Darboux map, transport the
// momentum functions through it, verify {S_i,S_j} = f_ij^k S_k under P, pick
// H = S_{h_index} (1-based) and collect the invariants {H} u {S_k : {H,S_k}=0}.
inline BuildResult build_system(const GroupJacobi& j, const DarbouxMap& m,
                                const Realization& r, int h_index, Rng& rng,
                                const std::string& target = "") {
  if (h_index < 1 || h_index > r.algebra.dim())
    throw std::invalid_argument("h_index out of range");
  Report rep;
  PoissonBivector p = poissonize(j);
  rep.merge(verify_darboux(m, p, rng, target));

  Context& ctx = const_cast<Context&>(*p.chart.ctx);
  Chart phase = phase_chart(ctx);
  std::map<Symbol, Scalar> repl;
  for (int k = 0; k < 2; ++k) {
    repl[phase.coords[k]] = m.qs[k];
    repl[phase.coords[2 + k]] = m.ps[k];
  }
  std::vector<Scalar> s;
  for (const Scalar& f : momentum_substitute(r)) s.push_back(f.substitute(repl));

  const auto& g = r.algebra;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      Scalar want(ctx);
      for (int c = 0; c < g.dim(); ++c)
        want = want + Scalar::constant(ctx, g.f(a, b, c)) * s[c];
      Scalar res = poisson_bracket(s[a], s[b], p.field) - want;
      std::string pair = "{S" + std::to_string(a + 1) + ",S" + std::to_string(b + 1) + "}";
      rep.add("symmetry_bracket" + pair, target, res.is_zero(),
              res.is_zero() ? "" : res.str());
    }

  Scalar h = s[h_index - 1];
  std::vector<Scalar> inv = {h};
  for (int k = 0; k < g.dim(); ++k) {
    if (k == h_index - 1) continue;
    if (poisson_bracket(h, s[k], p.field).is_zero()) inv.push_back(s[k]);
  }
  return BuildResult{HamiltonianSystem{std::move(p), m, std::move(s), std::move(h),
                                       std::move(inv)},
                     std::move(rep)};
}

// {H, I} = 0 for every invariant, and (H, first other invariant) functionally
// independent at sampled rational points.
inline Report involution_check(const HamiltonianSystem& sys, Rng& rng,
                               const std::string& target = "", int npoints = 3) {
  Report rep;
  for (size_t k = 0; k < sys.invariants.size(); ++k) {
    Scalar res = poisson_bracket(sys.h, sys.invariants[k], sys.p.field);
    rep.add("involution[" + std::to_string(k) + "]", target, res.is_zero(),
            res.is_zero() ? "" : res.str());
  }
  if (sys.invariants.size() < 2) {
    rep.add("invariant_independence", target, false, "fewer than two invariants");
    return rep;
  }
  int full = 0;
  for (int pt = 0; pt < npoints; ++pt) {
    std::map<Symbol, Rational> at;
    for (Symbol c : sys.p.chart.coords) at[c] = rng.rational(2, 3);
    std::vector<std::vector<double>> jac;
    for (const Scalar* f : {&sys.invariants[0], &sys.invariants[1]}) {
      std::vector<double> row;
      for (Symbol c : sys.p.chart.coords)
        row.push_back(f->differentiate(c).evaluate_double(at));
      jac.push_back(std::move(row));
    }
    if (float_rank(jac) == 2) ++full;
  }
  rep.add("invariant_independence", target, full == npoints,
          full == npoints ? "" : "rank deficiency at sampled points");
  return rep;
}

// Exact right-hand sides xdot^mu = P^{mu nu} d_nu H.
inline std::vector<std::pair<std::string, Scalar>> equations_of_motion(
    const HamiltonianSystem& sys) {
  Multivector xh = hamiltonian_vector_field(sys.h, sys.p.field);
  const Context& ctx = *sys.p.chart.ctx;
  std::vector<std::pair<std::string, Scalar>> out;
  for (int mu = 0; mu < sys.p.chart.dim(); ++mu)
    out.emplace_back(ctx.name(sys.p.chart.coords[mu]), xh.component({mu}));
  return out;
}

// --- the five example pipelines ----------------------------------------------

struct ExamplePipeline {
  std::string group;
  GroupJacobi jacobi;
  DarbouxMap darboux;
  Realization realization;
  int h_index;
  Scalar expected_h;
};

// Entry indices into the Jacobi catalog rows and the Darboux maps for each
// worked example.  The III map's p2 and the IV map's q1 differ from the source
// text, whose versions leave a nonzero cross bracket; these are fully
// canonical.
inline std::vector<ExamplePipeline> example_pipelines(Context& ctx) {
  auto cat = jacobi_catalog(ctx);
  auto reals = realization_catalog(ctx);
  Chart ch4 = make_chart(ctx, {"x", "y", "z", "s"});
  auto X = Scalar::sym(ctx, ch4.coords[0]), Y = Scalar::sym(ctx, ch4.coords[1]),
       Z = Scalar::sym(ctx, ch4.coords[2]), S = Scalar::sym(ctx, ch4.coords[3]);
  Symbol z = ch4.coords[2];
  Scalar es = Scalar::exp_of(ctx, ch4.coords[3], 1);
  std::vector<DarbouxMap> maps = {
      {{X, Y}, {es, Z * es}},
      {{-es * Y, X}, {S, (Y + Z) * es}},
      {{X + S, Y}, {(Y - Z) * es, es}},
      {{X, Y}, {Scalar::cosh_of(ctx, z) * es, Scalar::sinh_of(ctx, z) * es}},
      {{X, Y}, {Scalar::cos_of(ctx, z, 1) * es, Scalar::sin_of(ctx, z, 1) * es}}};
  std::vector<int> entry = {0, 0, 0, 1, 0};  // the VI0 example uses its P2 column
  std::vector<int> h_index = {3, 2, 2, 1, 1};
  std::vector<Scalar> hs = {-Y * es, -S, (-Y + Z) * es,
                            -Scalar::cosh_of(ctx, z) * es,
                            -Scalar::cos_of(ctx, z, 1) * es};
  std::vector<ExamplePipeline> out;
  for (int k = 0; k < 5; ++k)
    out.push_back(ExamplePipeline{cat[k].group, cat[k].entries[entry[k]].group_level,
                                  maps[k], reals[k], h_index[k], hs[k]});
  return out;
}

}  // namespace bihamil
