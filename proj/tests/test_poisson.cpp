#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bihamil/poisson.hpp>

using namespace bihamil;

TEST_CASE("poissonization reproduces the catalog columns verbatim") {
  Context ctx;
  for (const auto& row : jacobi_catalog(ctx))
    for (const auto& e : row.entries) {
      PoissonBivector p = poissonize(e.group_level);
      INFO(e.label);
      CHECK(p.chart.dim() == 4);
      CHECK(p.field == e.poisson_column);
      CHECK(check_poisson(p.field, e.label).all_pass());
    }
}

TEST_CASE("a single sign flip in the exponential breaks the Poisson condition") {
  Context ctx;
  auto cat = jacobi_catalog(ctx);
  const Multivector& good = cat[0].entries[0].poisson_column;
  Multivector bad(good.chart(), 2);
  for (const auto& [idx, v] : good.components())
    bad.add_term(idx, idx == std::vector<int>{0, 3} ? parse_scalar("exp(s)", ctx) : v);
  CHECK(check_poisson(bad).failures() > 0);
}

TEST_CASE("misprint control: the IV column only closes with the affine coefficient") {
  Context ctx;
  auto cat = jacobi_catalog(ctx);
  const Multivector& good = cat[2].entries[1].poisson_column;  // IV.2
  CHECK(good.component({1, 2}) == parse_scalar("(y-z+1)*exp(-s)", ctx));
  Multivector alt(good.chart(), 2);
  for (const auto& [idx, v] : good.components())
    alt.add_term(idx, idx == std::vector<int>{1, 2} ? parse_scalar("exp(-s)", ctx) : v);
  CHECK(check_poisson(alt).failures() > 0);
  MESSAGE("IV.2: coefficient (y-z+1) on dy^dz is the Poisson-consistent reading");
  // VII0.6: the consistent column carries (sin z + cos z) on dx^ds, matching
  // the Poissonization of the stored (Lambda, E) pair (checked verbatim above).
  CHECK(cat[4].entries[5].poisson_column.component({0, 3}) ==
        parse_scalar("exp(-s)*(sin(z)+cos(z))", ctx));
}

TEST_CASE("non-degeneracy of the five example structures") {
  Context ctx;
  auto cat = jacobi_catalog(ctx);
  Symbol s = ctx.lookup("s");
  for (const auto& row : cat) {
    Scalar pf = pfaffian(row.entries[0].poisson_column);
    INFO(row.group);
    CHECK(!pf.is_zero());
  }
  CHECK(pfaffian(cat[0].entries[0].poisson_column) == Scalar::exp_of(ctx, s, -2));
}

TEST_CASE("Darboux maps of the five examples") {
  Context ctx;
  auto cat = jacobi_catalog(ctx);
  Symbol x = ctx.lookup("x"), y = ctx.lookup("y"), z = ctx.lookup("z"),
         s = ctx.lookup("s");
  auto X = Scalar::sym(ctx, x), Y = Scalar::sym(ctx, y), Z = Scalar::sym(ctx, z),
       S = Scalar::sym(ctx, s);
  Scalar es = Scalar::exp_of(ctx, s, 1);
  // III and IV differ from the source text: the printed III p2 = z e^s and
  // IV q1 = x leave a nonzero cross bracket; these variants are fully
  // canonical.  The VI0 example is built on its second catalog column.
  std::vector<DarbouxMap> maps = {
      {{X, Y}, {es, Z * es}},                                            // II
      {{-es * Y, X}, {S, (Y + Z) * es}},                                 // III
      {{X + S, Y}, {(Y - Z) * es, es}},                                  // IV
      {{X, Y}, {Scalar::cosh_of(ctx, z) * es, Scalar::sinh_of(ctx, z) * es}},
      {{X, Y}, {Scalar::cos_of(ctx, z, 1) * es, Scalar::sin_of(ctx, z, 1) * es}}};
  std::vector<int> example_entry = {0, 0, 0, 1, 0};  // VI0 example uses P2
  for (size_t k = 0; k < maps.size(); ++k) {
    Rng rng(99);
    const Multivector& col = cat[k].entries[example_entry[k]].poisson_column;
    PoissonBivector p{col.chart(), col};
    Report rep = verify_darboux(maps[k], p, rng, cat[k].group);
    INFO(cat[k].group);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("each catalog family is mutually compatible") {
  Context ctx;
  int pairs = 0;
  for (const auto& row : jacobi_catalog(ctx)) {
    std::vector<Multivector> ps;
    for (const auto& e : row.entries) ps.push_back(e.poisson_column);
    for (const auto& c : compat_matrix(ps)) {
      INFO(row.group << " pair (" << c.i + 1 << "," << c.j + 1 << ")");
      CHECK(c.zero);
      ++pairs;
    }
  }
  CHECK(pairs == 61);  // 10 per four-member family, 21 for the six-member one
}

TEST_CASE("constant-ansatz constraints reduce exactly to p23 = 0") {
  Context ctx;
  auto ansatz = constant_ansatz(lie_ii_r(), ctx);
  auto cons = generate_constant_constraints(ansatz);
  REQUIRE(!cons.empty());
  Symbol p23 = ctx.lookup("p23");
  std::map<Symbol, Scalar> kill{{p23, Scalar(ctx)}};
  for (const auto& c : cons) CHECK(c.substitute(kill).is_zero());

  std::vector<Symbol> params;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      params.push_back(ctx.lookup("p" + std::to_string(i) + std::to_string(j)));
  Rng rng(31337);
  for (int t = 0; t < 100; ++t) {
    std::map<Symbol, Rational> at;
    for (Symbol p : params) at[p] = rng.rational(5, 4);
    at[p23] = 0;
    for (const auto& c : cons) CHECK(c.evaluate_rational(at) == 0);
  }
  for (int t = 0; t < 100; ++t) {
    std::map<Symbol, Rational> at;
    for (Symbol p : params) at[p] = rng.rational(5, 4);
    at[p23] = rng.nonzero_rational(5, 4);
    bool violated = false;
    for (const auto& c : cons)
      if (c.evaluate_rational(at) != 0) { violated = true; break; }
    CHECK(violated);
  }
}

TEST_CASE("the twelve representatives: Poisson, non-degenerate, verbatim group forms") {
  Context ctx;
  auto reps = constant_rep_catalog(ctx);
  REQUIRE(reps.size() == 12);
  using Spec = std::vector<std::pair<std::vector<int>, const char*>>;
  std::vector<Spec> expected = {
      {{{0, 1}, "1"}, {{0, 3}, "1-z"}, {{1, 3}, "1"}, {{2, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 2}, "1"}, {{2, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 3}, "-z"}, {{1, 3}, "1"}, {{2, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 3}, "1"}, {{2, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 2}, "1"}, {{0, 3}, "1"}, {{2, 3}, "1"}},
      {{{0, 1}, "1"}, {{2, 3}, "1"}},
      {{{0, 2}, "1"}, {{0, 3}, "-z"}, {{1, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 2}, "1"}, {{0, 3}, "-z"}, {{1, 3}, "1"}},
      {{{0, 2}, "1"}, {{0, 3}, "-z"}, {{1, 3}, "1"}, {{2, 3}, "1"}},
      {{{0, 2}, "1"}, {{0, 3}, "1-z"}, {{1, 3}, "1"}},
      {{{0, 1}, "1"}, {{0, 2}, "1"}, {{0, 3}, "1-z"}, {{1, 3}, "1"}},
      {{{0, 2}, "1"}, {{0, 3}, "1-z"}, {{1, 3}, "1"}, {{2, 3}, "1"}}};
  for (int k = 0; k < 12; ++k) {
    const auto& r = reps[k];
    INFO(r.label);
    CHECK(check_poisson(r.group_form, r.label).all_pass());
    Rational pf = rat_pfaffian4(r.p);
    CHECK((pf == 1 || pf == -1));
    Scalar gpf = pfaffian(r.group_form);
    CHECK(gpf == Scalar::constant(ctx, pf));  // unimodular vielbein preserves it
    Multivector want(r.group_form.chart(), 2);
    for (const auto& [idx, txt] : expected[k]) want.add_term(idx, parse_scalar(txt, ctx));
    CHECK(r.group_form == want);
  }
}

TEST_CASE("class-1 automorphism carries the generic solution to the representative") {
  Context ctx;
  RatMat rep = constant_rep_matrix(1, 1, 0, 1, 1);
  Rng rng(777);
  int done = 0;
  while (done < 3) {
    Class1Params v;
    v.p12 = rng.rational(4, 3);
    v.p13 = rng.rational(4, 3);
    v.p14 = rng.rational(4, 3);
    v.p24 = rng.nonzero_rational(4, 3);
    v.p34 = rng.rational(4, 3);
    v.a21 = rng.rational(4, 3);
    v.a24 = rng.rational(4, 3);
    v.a31 = rng.rational(4, 3);
    v.a32 = rng.nonzero_rational(4, 3);
    Rational delta = v.p12 * v.p34 - v.p13 * v.p24;
    if (delta == 0) continue;
    RatMat a = class1_automorphism(v);
    RatMat p = constant_rep_matrix(v.p12, v.p34, v.p13, v.p24, v.p14);
    RatMat moved = poisson_automorphism_act(lie_ii_r(), p, a);
    CHECK(moved == rep);
    CHECK(rmat_det(a) == Rational(1) / delta);
    CHECK(rat_pfaffian4(moved) == rmat_det(a) * rat_pfaffian4(p));
    ++done;
  }
}

TEST_CASE("the full 12 x 12 compatibility table is computed and reported") {
  Context ctx;
  auto reps = constant_rep_catalog(ctx);
  std::vector<Multivector> ps;
  for (const auto& r : reps) ps.push_back(r.group_form);
  auto mat = compat_matrix(ps);
  CHECK(mat.size() == 78);  // 12 self + 66 cross pairs
  int vanishing = 0;
  for (const auto& c : mat) {
    if (c.i == c.j) CHECK(c.zero);  // each representative is Poisson
    vanishing += c.zero;
  }
  MESSAGE("vanishing brackets among the twelve representatives: " << vanishing << "/78");
}

TEST_CASE("incompatibility witness for Poissonizations of shared Jacobi data") {
  Context ctx;
  IncompatWitness w = incompat_witness(ctx);
  Symbol z = ctx.lookup("z"), s = ctx.lookup("s");
  CHECK(w.index == std::vector<int>{0, 1, 3});
  CHECK(!w.component.is_zero());
  Scalar expected = (Scalar::sinh_of(ctx, z) -
                     Scalar::sym(ctx, z) * Scalar::cosh_of(ctx, z)) *
                    Scalar::exp_of(ctx, s, -2);
  CHECK(w.component == expected);
}
