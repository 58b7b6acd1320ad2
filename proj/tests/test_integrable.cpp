#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bihamil/integrable.hpp>

using namespace bihamil;

TEST_CASE("plane realizations close under the algebra commutators") {
  Context ctx;
  auto reals = realization_catalog(ctx);
  REQUIRE(reals.size() == 5);
  for (const auto& r : reals) {
    INFO(r.algebra.name());
    CHECK(check_realization(r).all_pass());
  }
  // spot values
  CHECK(reals[0].gens[2].component({0}) == parse_scalar("q2", ctx));
  CHECK(reals[4].gens[2].component({1}) == parse_scalar("-q1", ctx));
}

TEST_CASE("momentum functions close canonically") {
  Context ctx;
  auto reals = realization_catalog(ctx);
  Chart phase = phase_chart(ctx);
  Multivector can = canonical_bivector(phase);
  for (const auto& r : reals) {
    auto st = momentum_substitute(r);
    const auto& g = r.algebra;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = a + 1; b < g.dim(); ++b) {
        Scalar want(ctx);
        for (int c = 0; c < g.dim(); ++c)
          want = want + Scalar::constant(ctx, g.f(a, b, c)) * st[c];
        INFO(g.name() << " pair " << a + 1 << "," << b + 1);
        CHECK(poisson_bracket(st[a], st[b], can) == want);
      }
  }
  // printed forms for II
  auto st = momentum_substitute(reals[0]);
  CHECK(st[0] == parse_scalar("-p1", ctx));
  CHECK(st[1] == parse_scalar("-p2", ctx));
  CHECK(st[2] == parse_scalar("-q2*p1", ctx));
}

TEST_CASE("the five example systems build, match the printed Hamiltonians") {
  Context ctx;
  auto pipes = example_pipelines(ctx);
  Symbol z = ctx.lookup("z"), s = ctx.lookup("s");
  Scalar es = Scalar::exp_of(ctx, s, 1);
  std::vector<Scalar> second = {
      -es,                                                 // II: S1
      -(Scalar::sym(ctx, ctx.lookup("y")) + Scalar::sym(ctx, z)) * es,  // III: S3
      Scalar::sym(ctx, ctx.lookup("y")) *
          (-Scalar::sym(ctx, ctx.lookup("y")) + Scalar::sym(ctx, z)) * es,  // IV: S3
      -Scalar::sinh_of(ctx, z) * es,                        // VI0: S2
      -Scalar::sin_of(ctx, z, 1) * es};                     // VII0: S2
  for (size_t k = 0; k < pipes.size(); ++k) {
    const auto& pl = pipes[k];
    Rng rng(555);
    BuildResult b = build_system(pl.jacobi, pl.darboux, pl.realization, pl.h_index, rng,
                                 pl.group);
    INFO(pl.group);
    CHECK(b.report.all_pass());
    CHECK(b.sys.h == pl.expected_h);
    REQUIRE(b.sys.invariants.size() >= 2);
    CHECK(b.sys.invariants[1] == second[k]);
    Rng rng2(556);
    CHECK(involution_check(b.sys, rng2, pl.group).all_pass());
  }
}

TEST_CASE("printed symmetry brackets of the II example") {
  Context ctx;
  auto pipes = example_pipelines(ctx);
  Rng rng(1);
  BuildResult b = build_system(pipes[0].jacobi, pipes[0].darboux, pipes[0].realization,
                               pipes[0].h_index, rng);
  CHECK(b.sys.s[0] == parse_scalar("-exp(s)", ctx));
  CHECK(b.sys.s[1] == parse_scalar("-z*exp(s)", ctx));
  CHECK(b.sys.s[2] == parse_scalar("-y*exp(s)", ctx));
  CHECK(poisson_bracket(b.sys.s[1], b.sys.s[2], b.sys.p.field) == b.sys.s[0]);
}

TEST_CASE("equations of motion conserve the invariants") {
  Context ctx;
  auto pipes = example_pipelines(ctx);
  for (const auto& pl : pipes) {
    Rng rng(7);
    BuildResult b = build_system(pl.jacobi, pl.darboux, pl.realization, pl.h_index, rng);
    auto eom = equations_of_motion(b.sys);
    CHECK(eom.size() == 4);
    Multivector xh = hamiltonian_vector_field(b.sys.h, b.sys.p.field);
    for (const auto& inv : b.sys.invariants) {
      INFO(pl.group);
      CHECK(apply_vector(xh, inv).is_zero());
    }
  }
  // a constant Hamiltonian generates no motion
  Rng rng(7);
  BuildResult b = build_system(pipes[0].jacobi, pipes[0].darboux, pipes[0].realization,
                               pipes[0].h_index, rng);
  Multivector still =
      hamiltonian_vector_field(Scalar::constant(ctx, 5), b.sys.p.field);
  CHECK(still.is_zero());
}
