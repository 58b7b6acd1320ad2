#pragma once
#include <fstream>
#include <memory>
#include <sstream>

#include "integrable.hpp"

namespace bihamil {

// INI-style structure definition:
//   [algebra]   name, dim, repeated `bracket = [a,b] -> c1*X1 + c2*X2` lines
//   [vielbein]  coords = x, y, z  and rows `row1 = 1, -z, 0`
//   [jacobi]    level = algebra|group, optional coords/params, lambda = [[..]],
//               E = [..]
//   [poisson]   plus_r = true
//   [darboux]   q = [..], p = [..]
//   [realization] lines `X1 = -q1*(q2-1)*d1 - q2^2*d2`
struct StructureFile {
  std::unique_ptr<Context> ctx;
  std::string name;
  std::optional<LieAlgebraDef> algebra;
  std::optional<Vielbein> vielbein;
  std::string jacobi_level;  // "algebra" or "group", empty if no [jacobi]
  std::optional<AlgebraJacobi> algebra_jacobi;
  std::optional<GroupJacobi> group_jacobi;
  bool plus_r = false;
  std::optional<DarbouxMap> darboux;
  std::optional<Realization> realization;
};

namespace detail {

struct FileError : std::runtime_error {
  FileError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// split on top-level commas (ignoring commas inside brackets/parentheses)
inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// "[a, b, c]" -> elements
inline std::vector<std::string> bracket_list(const std::string& s, const std::string& file,
                                             int line) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw FileError(file, line, "expected a [..] list");
  return split_list(t.substr(1, t.size() - 2));
}

// linear combination of placeholder symbols: returns the coefficient of each
inline std::vector<Scalar> linear_coefficients(const Scalar& expr, Context& ctx,
                                               const std::vector<Symbol>& places) {
  std::map<Symbol, Scalar> zero;
  for (Symbol p : places) zero[p] = Scalar(ctx);
  if (!expr.substitute(zero).is_zero())
    throw std::invalid_argument("expression has a term free of the placeholders");
  std::vector<Scalar> out;
  Scalar rebuilt(ctx);
  for (Symbol p : places) {
    auto repl = zero;
    repl[p] = Scalar::constant(ctx, 1);
    Scalar c = expr.substitute(repl);
    rebuilt = rebuilt + c * Scalar::sym(ctx, p);
    out.push_back(std::move(c));
  }
  if (!(rebuilt - expr).is_zero())
    throw std::invalid_argument("expression is not linear in the placeholders");
  return out;
}

}  // namespace detail

inline StructureFile load_structure_file(const std::string& path) {
  using detail::FileError;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  // collect sections, preserving line numbers
  std::map<std::string, std::vector<std::tuple<std::string, std::string, int>>> sec;
  std::string line, cur;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      cur = t.substr(1, t.size() - 2);
      sec[cur];
      continue;
    }
    auto eq = t.find('=');
    if (cur.empty() || eq == std::string::npos)
      throw FileError(path, lineno, "expected `key = value` inside a section");
    sec[cur].emplace_back(detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)),
                          lineno);
  }

  StructureFile out;
  out.ctx = std::make_unique<Context>();
  Context& ctx = *out.ctx;

  auto get = [&](const std::string& s, const std::string& k) -> const std::string* {
    auto it = sec.find(s);
    if (it == sec.end()) return nullptr;
    for (const auto& [key, val, ln] : it->second)
      if (key == k) return &val;
    return nullptr;
  };

  // [algebra]
  if (auto it = sec.find("algebra"); it != sec.end()) {
    int dim = 0;
    const std::string* d = get("algebra", "dim");
    if (!d) throw FileError(path, 0, "[algebra] requires dim");
    dim = std::stoi(*d);
    if (const std::string* n = get("algebra", "name")) out.name = *n;
    std::vector<Symbol> places;
    for (int k = 1; k <= dim; ++k) places.push_back(ctx.parameter("X" + std::to_string(k)));
    std::vector<std::array<int, 4>> entries;
    LieAlgebraDef g(out.name.empty() ? "user" : out.name, dim);
    for (const auto& [key, val, ln] : it->second) {
      if (key != "bracket") continue;
      auto arrow = val.find("->");
      if (arrow == std::string::npos) throw FileError(path, ln, "bracket needs `->`");
      auto lhs = detail::bracket_list(val.substr(0, arrow), path, ln);
      if (lhs.size() != 2) throw FileError(path, ln, "bracket lhs needs two indices");
      int a = std::stoi(lhs[0]), b = std::stoi(lhs[1]);
      Scalar rhs = parse_scalar(val.substr(arrow + 2), ctx);
      auto coeffs = detail::linear_coefficients(rhs, ctx, places);
      for (int c = 0; c < dim; ++c) {
        auto cc = coeffs[c].as_constant();
        if (!cc) throw FileError(path, ln, "bracket coefficients must be constant");
        if (*cc != 0) g.set(a - 1, b - 1, c, *cc);
      }
    }
    // the entry constructor only validates its initial data, so re-check the
    // Jacobi identity over the assembled constants
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        for (int c = b + 1; c < dim; ++c)
          for (int e = 0; e < dim; ++e) {
            Rational sum(0);
            for (int d2 = 0; d2 < dim; ++d2)
              sum += g.f(a, b, d2) * g.f(d2, c, e) + g.f(b, c, d2) * g.f(d2, a, e) +
                     g.f(c, a, d2) * g.f(d2, b, e);
            if (sum != 0)
              throw FileError(path, 0, "structure constants violate the Jacobi identity");
          }
    out.algebra = std::move(g);
  }

  // chart coordinates: [vielbein] coords or [jacobi] coords
  std::optional<Chart> chart;
  auto read_coords = [&](const std::string* v) {
    if (!v || chart) return;
    std::vector<std::string> names = detail::split_list(*v);
    chart = make_chart(ctx, names);
  };
  read_coords(get("vielbein", "coords"));
  read_coords(get("jacobi", "coords"));

  // [vielbein]
  if (sec.count("vielbein")) {
    if (!out.algebra) throw FileError(path, 0, "[vielbein] requires [algebra]");
    if (!chart) throw FileError(path, 0, "[vielbein] requires coords");
    int n = out.algebra->dim();
    ScalarMat frame = smat_zero(ctx, n, n);
    for (int r = 1; r <= n; ++r) {
      const std::string* row = get("vielbein", "row" + std::to_string(r));
      if (!row) throw FileError(path, 0, "[vielbein] missing row" + std::to_string(r));
      auto cells = detail::split_list(*row);
      if (static_cast<int>(cells.size()) != n)
        throw FileError(path, 0, "vielbein row has wrong width");
      for (int c = 0; c < n; ++c) frame[r - 1][c] = parse_scalar(cells[c], ctx);
    }
    out.vielbein = make_vielbein(*out.algebra, *chart, std::move(frame));
  }

  // [jacobi]
  if (sec.count("jacobi")) {
    if (const std::string* ps = get("jacobi", "params"))
      for (const std::string& p : detail::split_list(*ps)) ctx.parameter(p);
    const std::string* lv = get("jacobi", "level");
    if (!lv) throw FileError(path, 0, "[jacobi] requires level = algebra|group");
    out.jacobi_level = *lv;
    const std::string* lam = get("jacobi", "lambda");
    const std::string* ev = get("jacobi", "E");
    if (!lam || !ev) throw FileError(path, 0, "[jacobi] requires lambda and E");
    int n = out.algebra ? out.algebra->dim() : (chart ? chart->dim() : 0);
    if (n == 0) throw FileError(path, 0, "[jacobi] needs [algebra] or coords");
    auto rows = detail::bracket_list(*lam, path, 0);
    if (static_cast<int>(rows.size()) != n) throw FileError(path, 0, "lambda has wrong size");
    ScalarMat m = smat_zero(ctx, n, n);
    for (int i = 0; i < n; ++i) {
      auto cells = detail::bracket_list(rows[i], path, 0);
      if (static_cast<int>(cells.size()) != n)
        throw FileError(path, 0, "lambda row has wrong width");
      for (int j = 0; j < n; ++j) m[i][j] = parse_scalar(cells[j], ctx);
    }
    auto evec = detail::bracket_list(*ev, path, 0);
    if (static_cast<int>(evec.size()) != n) throw FileError(path, 0, "E has wrong size");
    std::vector<Scalar> e;
    for (const auto& c : evec) e.push_back(parse_scalar(c, ctx));

    if (*lv == "algebra") {
      if (!out.algebra) throw FileError(path, 0, "algebra-level jacobi needs [algebra]");
      out.algebra_jacobi = make_algebra_jacobi(*out.algebra, ctx, std::move(m), std::move(e));
      if (out.vielbein) out.group_jacobi = push_to_group(*out.algebra_jacobi, *out.vielbein);
    } else if (*lv == "group") {
      if (!chart) throw FileError(path, 0, "group-level jacobi needs coords");
      Multivector lamf(*chart, 2), ef(*chart, 1);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!(m[i][j] + m[j][i]).is_zero())
            throw FileError(path, 0, "group lambda must be antisymmetric");
          lamf.add_term({i, j}, m[i][j]);
        }
        ef.add_term({i}, e[i]);
      }
      out.group_jacobi = GroupJacobi{*chart, std::move(lamf), std::move(ef)};
    } else {
      throw FileError(path, 0, "level must be algebra or group");
    }
  }

  // [poisson]
  if (const std::string* pr = get("poisson", "plus_r")) out.plus_r = (*pr == "true");

  // [darboux]
  if (sec.count("darboux")) {
    const std::string* q = get("darboux", "q");
    const std::string* p = get("darboux", "p");
    if (!q || !p) throw FileError(path, 0, "[darboux] requires q and p");
    ctx.coordinate("s");  // the Poissonization coordinate may appear
    DarbouxMap m;
    for (const auto& c : detail::bracket_list(*q, path, 0))
      m.qs.push_back(parse_scalar(c, ctx));
    for (const auto& c : detail::bracket_list(*p, path, 0))
      m.ps.push_back(parse_scalar(c, ctx));
    out.darboux = std::move(m);
  }

  // [realization]
  if (sec.count("realization")) {
    if (!out.algebra) throw FileError(path, 0, "[realization] requires [algebra]");
    Chart q = make_chart(ctx, {"q1", "q2"});
    std::vector<Symbol> ds = {ctx.parameter("d1"), ctx.parameter("d2")};
    std::vector<Multivector> gens;
    for (int k = 1; k <= out.algebra->dim(); ++k) {
      const std::string* v = get("realization", "X" + std::to_string(k));
      if (!v) throw FileError(path, 0, "[realization] missing X" + std::to_string(k));
      Scalar expr = parse_scalar(*v, ctx);
      auto coeffs = detail::linear_coefficients(expr, ctx, ds);
      Multivector gen(q, 1);
      for (int c = 0; c < 2; ++c) gen.add_term({c}, coeffs[c]);
      gens.push_back(std::move(gen));
    }
    out.realization = Realization{*out.algebra, q, std::move(gens)};
  }

  return out;
}

}  // namespace bihamil
