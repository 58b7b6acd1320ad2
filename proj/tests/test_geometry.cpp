#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bihamil/geometry.hpp>
#include <bihamil/parser.hpp>
#include <bihamil/rng.hpp>

using namespace bihamil;

namespace {

struct G3 {
  Context ctx;
  Chart ch = make_chart(ctx, {"x", "y", "z"});
  Scalar S(const std::string& t) { return parse_scalar(t, ctx); }
};

struct G4 {
  Context ctx;
  Chart ch = make_chart(ctx, {"x", "y", "z", "s"});
  Scalar S(const std::string& t) { return parse_scalar(t, ctx); }
};

// Jacobi structure of the Heisenberg group chart: L = -z dx^dz + dy^dz, E = -dx
Multivector heis_lambda(G3& g) {
  Multivector l(g.ch, 2);
  l.add_term({0, 2}, g.S("-z"));
  l.add_term({1, 2}, g.S("1"));
  return l;
}
Multivector heis_e(G3& g) {
  Multivector e(g.ch, 1);
  e.add_term({0}, g.S("-1"));
  return e;
}

Multivector random_bivector(Rng& rng, const Chart& ch, bool constant) {
  Multivector p(ch, 2);
  Context& ctx = const_cast<Context&>(*ch.ctx);
  for (int i = 0; i < ch.dim(); ++i)
    for (int j = i + 1; j < ch.dim(); ++j) {
      Scalar v = Scalar::constant(ctx, rng.rational(4, 3));
      if (!constant && rng.below(2))
        v = v * Scalar::sym(ctx, ch.coords[rng.below(ch.coords.size())]);
      p.add_term({i, j}, v);
    }
  return p;
}

Scalar random_fn(Rng& rng, const Chart& ch) {
  Context& ctx = const_cast<Context&>(*ch.ctx);
  Scalar f = Scalar::constant(ctx, rng.rational(4, 3));
  for (int t = 0; t < 2; ++t) {
    Scalar term = Scalar::constant(ctx, rng.rational(4, 3));
    for (Symbol c : ch.coords)
      if (rng.below(2)) term = term * Scalar::sym(ctx, c);
    f = f + term;
  }
  return f;
}

}  // namespace

TEST_CASE("wedge basics") {
  G3 g;
  Multivector e = heis_e(g), l = heis_lambda(g);
  Multivector w = wedge(e, l);
  CHECK(w.component({0, 1, 2}) == g.S("-1"));  // the z dx^dz part dies against dx

  Multivector v(g.ch, 1);
  v.add_term({0}, g.S("x"));
  v.add_term({1}, g.S("y"));
  CHECK(wedge(v, v).is_zero());

  G4 h;
  Multivector a(h.ch, 2), b(h.ch, 2);
  a.add_term({0, 1}, h.S("1"));
  b.add_term({2, 3}, h.S("1"));
  CHECK(wedge(a, b).component({0, 1, 2, 3}) == h.S("1"));
}

TEST_CASE("wedge graded symmetry") {
  G4 g;
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    Multivector a = random_bivector(rng, g.ch, false);
    Multivector b = random_bivector(rng, g.ch, false);
    CHECK(wedge(a, b) == wedge(b, a));  // (-1)^{2*2}
    Multivector v(g.ch, 1);
    v.add_term({static_cast<int>(rng.below(4))}, random_fn(rng, g.ch));
    Multivector lhs = wedge(v, a);
    Multivector rhs = wedge(a, v);
    CHECK(lhs == rhs);  // (-1)^{1*2}
  }
}

TEST_CASE("schouten calibration on the defining identity") {
  G3 g;
  Multivector l = heis_lambda(g), e = heis_e(g);
  Multivector lhs = schouten(l, l);
  Multivector rhs = Rational(2) * wedge(e, l);
  CHECK(lhs == rhs);
  CHECK(lhs.component({0, 1, 2}) == g.S("-2"));
  CHECK(schouten(e, l).is_zero());  // L_E Lambda = 0
}

TEST_CASE("schouten trivia and errors") {
  G4 g;
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Multivector p = random_bivector(rng, g.ch, true);
    CHECK(schouten(p, p).is_zero());  // constant bivectors
    Multivector q = random_bivector(rng, g.ch, false);
    CHECK(schouten(p, q) == schouten(q, p));
  }
  Multivector f0(g.ch, 0);
  Multivector p = random_bivector(rng, g.ch, true);
  CHECK_THROWS_AS(schouten(f0, p), std::invalid_argument);
  G3 other;
  CHECK_THROWS_AS(schouten(p, heis_lambda(other)), std::invalid_argument);
}

TEST_CASE("schouten vector-vector is the Lie bracket") {
  G3 g;
  // [e2, e3] = e1 for the frame e2 = -z dx + dy, e3 = dz
  Multivector e2(g.ch, 1), e3(g.ch, 1);
  e2.add_term({0}, g.S("-z"));
  e2.add_term({1}, g.S("1"));
  e3.add_term({2}, g.S("1"));
  Multivector br = schouten(e2, e3);
  CHECK(br.component({0}) == g.S("1"));
  CHECK(br.component({1}).is_zero());
  CHECK(br.component({2}).is_zero());
}

TEST_CASE("poisson and jacobi brackets") {
  G4 g;
  // Poissonization of the Heisenberg-chart structure
  Multivector p(g.ch, 2);
  p.add_term({0, 2}, g.S("-z*exp(-s)"));
  p.add_term({0, 3}, g.S("exp(-s)"));
  p.add_term({1, 2}, g.S("exp(-s)"));
  CHECK(poisson_bracket(g.S("x"), g.S("exp(s)"), p) == g.S("1"));
  Scalar f = g.S("x*y + z");
  CHECK(poisson_bracket(f, f, p).is_zero());
  CHECK(pfaffian(p) == g.S("exp(-2*s)"));
  CHECK(pfaffian(Multivector(g.ch, 2)).is_zero());

  G3 g3;
  Multivector l = heis_lambda(g3), e = heis_e(g3), zero1(g3.ch, 1);
  CHECK(jacobi_bracket(g3.S("x"), g3.S("y"), l, zero1) ==
        poisson_bracket(g3.S("x"), g3.S("y"), l));
  CHECK(jacobi_bracket(g3.S("1"), g3.S("y"), l, e) == apply_vector(e, g3.S("y")));
  CHECK(jacobi_bracket(g3.S("x"), g3.S("y"), l, e) == g3.S("y"));
}

TEST_CASE("hamiltonian vector field") {
  G4 g;
  Multivector p(g.ch, 2);
  p.add_term({0, 2}, g.S("-z*exp(-s)"));
  p.add_term({0, 3}, g.S("exp(-s)"));
  p.add_term({1, 2}, g.S("exp(-s)"));
  Scalar h = g.S("-y*exp(s)");
  Multivector xh = hamiltonian_vector_field(h, p);
  CHECK(apply_vector(xh, h).is_zero());
  CHECK(apply_vector(xh, g.S("x")) == poisson_bracket(g.S("x"), h, p));
  CHECK(hamiltonian_vector_field(g.S("5"), p).is_zero());
  Scalar s1 = g.S("-exp(s)");
  CHECK(apply_vector(xh, s1).is_zero());  // invariant of the flow
}

TEST_CASE("bracket antisymmetry and Leibniz randomized") {
  G4 g;
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    Multivector p = random_bivector(rng, g.ch, false);
    Scalar f = random_fn(rng, g.ch), h = random_fn(rng, g.ch), k = random_fn(rng, g.ch);
    CHECK(poisson_bracket(f, h, p) == -poisson_bracket(h, f, p));
    CHECK(poisson_bracket(f, h * k, p) ==
          h * poisson_bracket(f, k, p) + poisson_bracket(f, h, p) * k);
  }
}

TEST_CASE("pfaffian squared equals determinant at random points (float oracle)") {
  G4 g;
  Rng rng(1234);
  for (int i = 0; i < 20; ++i) {
    Multivector p = random_bivector(rng, g.ch, false);
    std::map<Symbol, Rational> at;
    for (Symbol c : g.ch.coords) at[c] = rng.rational(3, 3);
    double pf = pfaffian(p).evaluate_double(at);
    double m[4][4];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m[a][b] = p.component({a, b}).evaluate_double(at);
    // 4x4 determinant, cofactor expansion
    auto det3 = [&](int r[3], int c[3]) {
      return m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]) -
             m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]) +
             m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
    };
    double det = 0;
    int rows[3] = {1, 2, 3};
    for (int j = 0; j < 4; ++j) {
      int cols[3], k = 0;
      for (int c = 0; c < 4; ++c)
        if (c != j) cols[k++] = c;
      det += ((j % 2) ? -1 : 1) * m[0][j] * det3(rows, cols);
    }
    CHECK(std::abs(pf * pf - det) < 1e-9 * std::max(1.0, std::abs(det)));
  }
}
