#pragma once

#include <optional>
#include <vector>

#include "foldhecke/errors.hpp"
#include "foldhecke/rat.hpp"

namespace fh {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

using QVec = Vec<Rat>;
using QMat = Mat<Rat>;
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

template <class T>
Mat<T> zeros(std::size_t r, std::size_t c) {
  return Mat<T>(r, Vec<T>(c, T(0)));
}

template <class T>
Mat<T> identity(std::size_t n) {
  auto m = zeros<T>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  auto c = zeros<T>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class T>
Vec<T> matvec(const Mat<T>& a, const Vec<T>& v) {
  Vec<T> r(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
  return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  if (a.empty()) return {};
  auto t = zeros<T>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Row-reduce in place to reduced echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    T inv = T(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return rref(m).size();
}

// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
template <class T>
Mat<T> nullspace(Mat<T> m, std::size_t cols) {
  Mat<T> basis;
  if (m.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      Vec<T> v(cols, T(0));
      v[j] = T(1);
      basis.push_back(v);
    }
    return basis;
  }
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(v);
  }
  return basis;
}

// Some x with m x = b, or nullopt.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& m, const Vec<T>& b) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Mat<T> aug(rows, Vec<T>(cols + 1, T(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = b[i];
  }
  auto piv = rref(aug);
  Vec<T> x(cols, T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;
    x[piv[r]] = aug[r][cols];
  }
  return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  std::size_t n = m.size();
  Mat<T> aug(n, Vec<T>(2 * n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvariantError("singular matrix");
  Mat<T> inv(n, Vec<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QMat to_qmat(const IMat& m);
QVec to_qvec(const IVec& v);

// Hermite basis of the Z-span of rational row vectors (nonzero rows only).
QMat lattice_basis(const QMat& gens);
// Is v in the Z-span of the rows of a basis returned by lattice_basis?
std::optional<QVec> lattice_coords(const QMat& basis, const QVec& v);
// Invariant factors of an integer matrix (nonzero ones).
std::vector<Rat> smith_invariants(const QMat& m);
// Primitive integer vector proportional to v (first nonzero entry positive).
QVec primitive(const QVec& v);

}  // namespace fh
