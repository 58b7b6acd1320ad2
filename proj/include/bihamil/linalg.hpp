#pragma once
#include "scalar.hpp"

namespace bihamil {

using ScalarMat = std::vector<std::vector<Scalar>>;
using RatMat = std::vector<std::vector<Rational>>;

inline ScalarMat smat_zero(const Context& ctx, int n, int m) {
  return ScalarMat(n, std::vector<Scalar>(m, Scalar(ctx)));
}

inline ScalarMat smat_identity(const Context& ctx, int n) {
  ScalarMat r = smat_zero(ctx, n, n);
  for (int i = 0; i < n; ++i) r[i][i] = Scalar::constant(ctx, 1);
  return r;
}

inline ScalarMat smat_from_rat(const Context& ctx, const RatMat& a) {
  ScalarMat r = smat_zero(ctx, static_cast<int>(a.size()), static_cast<int>(a[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[i][j] = Scalar::constant(ctx, a[i][j]);
  return r;
}

inline const Context& smat_ctx(const ScalarMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v.context()) return *v.context();
  throw std::logic_error("matrix has no context");
}

inline ScalarMat smat_mul(const ScalarMat& a, const ScalarMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  const Context& ctx = smat_ctx(a);
  ScalarMat r = smat_zero(ctx, static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

inline ScalarMat smat_transpose(const ScalarMat& a) {
  ScalarMat r(a[0].size(), std::vector<Scalar>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline Scalar smat_det(const ScalarMat& a) {
  size_t n = a.size();
  if (n == 1) return a[0][0];
  const Context* ctx = nullptr;
  for (const auto& row : a)
    for (const auto& v : row)
      if (v.context()) ctx = v.context();
  Scalar det = ctx ? Scalar(*ctx) : Scalar();
  for (size_t j = 0; j < n; ++j) {
    ScalarMat minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Scalar term = a[0][j] * smat_det(minor);
    det = (j % 2) ? det - term : det + term;
  }
  return det;
}

// Inverse via adjugate; requires the determinant to be a nonzero rational constant
// (all catalog vielbeins are unimodular, so no rational-function field is needed).
inline ScalarMat smat_inverse(const ScalarMat& a) {
  size_t n = a.size();
  Scalar det = smat_det(a);
  auto dc = det.as_constant();
  if (!dc) throw std::invalid_argument("matrix inverse needs a constant determinant");
  if (*dc == 0) throw std::invalid_argument("singular matrix");
  Rational inv = Rational(1) / *dc;
  const Context& ctx = *det.context();
  ScalarMat r = smat_zero(ctx, static_cast<int>(n), static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ScalarMat minor;
      for (size_t p = 0; p < n; ++p) {
        if (p == j) continue;
        std::vector<Scalar> row;
        for (size_t q = 0; q < n; ++q)
          if (q != i) row.push_back(a[p][q]);
        minor.push_back(std::move(row));
      }
      Scalar cof = n == 1 ? Scalar::constant(ctx, 1) : smat_det(minor);
      r[i][j] = ((i + j) % 2 ? -cof : cof) * inv;
    }
  return r;
}

inline RatMat rmat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat r(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline RatMat rmat_transpose(const RatMat& a) {
  RatMat r(a[0].size(), std::vector<Rational>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline RatMat rmat_identity(int n) {
  RatMat r(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline Rational rmat_det(const RatMat& a) {
  RatMat m = a;  // gaussian elimination over the rationals
  size_t n = m.size();
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace bihamil
