#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace weylzeta {

using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;

inline RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw DimensionMismatch("matrix product");
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RatVec apply(const RatMatrix& a, const RatVec& v) {
  RatVec r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

/// Row-reduces a copy of `a`; returns rank and determinant (when square).
inline std::pair<std::size_t, Rational> rank_and_det(RatMatrix a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      det = -det;
    }
    det *= a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  if (rank < rows || rows != cols) det = 0;
  return {rank, det};
}

inline std::size_t rank_of(const RatMatrix& a) { return rank_and_det(a).first; }
inline Rational determinant(const RatMatrix& a) { return rank_and_det(a).second; }

/// Gauss-Jordan inverse; throws DomainError when singular.
inline RatMatrix inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Solves a x = b for square invertible a.
inline RatVec solve(const RatMatrix& a, const RatVec& b) { return weylzeta::apply(inverse(a), b); }

/// Upper-triangular Hermite form of a full-rank square integer matrix, computed on rows.
/// The rows of the result span the same lattice; diagonal entries are positive.
inline IntMatrix hermite_rows(IntMatrix a) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c among rows c..n-1.
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = c; r < n; ++r)
        if (a[r][c] != 0 && (best == n || abs(a[r][c]) < abs(a[best][c]))) best = r;
      if (best == n) throw DomainError("lattice basis is not of full rank");
      std::swap(a[best], a[c]);
      bool done = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[c][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) a[r][j] -= q * a[c][j];
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[c][c] < 0)
      for (std::size_t j = c; j < n; ++j) a[c][j] = -a[c][j];
  }
  // Reduce entries above the diagonal into [0, diag).
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < c; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[c][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) a[r][j] -= q * a[c][j];
    }
  return a;
}

}  // namespace weylzeta
