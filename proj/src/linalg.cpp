#include "foldhecke/linalg.hpp"

#include <algorithm>

namespace fh {

QMat to_qmat(const IMat& m) {
  QMat q;
  for (auto& r : m) q.push_back(to_qvec(r));
  return q;
}

QVec to_qvec(const IVec& v) {
  QVec q;
  for (auto x : v) q.emplace_back(x);
  return q;
}

namespace {

// floor(a / b) for integral Rats
Rat floordiv(const Rat& a, const Rat& b) { return (a / b).floor(); }

void axpy_row(QVec& dst, const QVec& src, const Rat& f) {
  if (f.is_zero()) return;
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (!src[j].is_zero()) dst[j] -= f * src[j];
}

// Integer row HNF in place; returns the nonzero rows.
QMat hnf_rows(QMat rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size(), top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (!rows[r][c].is_zero() && (best == rows.size() || rows[r][c].abs() < rows[best][c].abs())) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c].is_zero()) continue;
        axpy_row(rows[r], rows[top], floordiv(rows[r][c], rows[top][c]));
        if (!rows[r][c].is_zero()) done = false;
      }
      if (done) break;
    }
    if (rows[top][c].is_zero()) continue;
    if (rows[top][c].sign() < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) axpy_row(rows[r], rows[top], floordiv(rows[r][c], rows[top][c]));
    ++top;
  }
  rows.resize(top);
  return rows;
}

}  // namespace

QMat lattice_basis(const QMat& gens) {
  if (gens.empty()) return {};
  Rat den(1);
  for (auto& r : gens)
    for (auto& x : r) den = lcm_den(den, x);
  QMat scaled;
  for (auto& r : gens) {
    if (is_zero_vec(r)) continue;
    QVec s;
    for (auto& x : r) s.push_back(x * den);
    scaled.push_back(std::move(s));
  }
  auto h = hnf_rows(std::move(scaled));
  for (auto& r : h)
    for (auto& x : r) x = x / den;
  return h;
}

std::optional<QVec> lattice_coords(const QMat& basis, const QVec& v) {
  QVec rest = v, coef;
  for (auto& row : basis) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    Rat c = rest[p] / row[p];
    if (!c.is_integer()) return std::nullopt;
    axpy_row(rest, row, c);
    coef.push_back(c);
  }
  if (!is_zero_vec(rest)) return std::nullopt;
  return coef;
}

std::vector<Rat> smith_invariants(const QMat& input) {
  QMat m = input;
  std::vector<Rat> inv;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!m[i][j].is_zero() && (bi == rows || m[i][j].abs() < m[bi][bj].abs())) bi = i, bj = j;
      if (bi == rows) return inv;
      std::swap(m[t], m[bi]);
      for (auto& r : m) std::swap(r[t], r[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        axpy_row(m[i], m[t], floordiv(m[i][t], m[t][t]));
        if (!m[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Rat f = floordiv(m[t][j], m[t][t]);
        if (f.is_zero()) {
          if (!m[t][j].is_zero()) clean = false;
          continue;
        }
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (!m[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!(m[i][j] / m[t][t]).is_integer()) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    inv.push_back(m[t][t].abs());
  }
  return inv;
}

QVec primitive(const QVec& v) {
  Rat g(0);
  for (auto& x : v) g = gcd(g, x);
  if (g.is_zero()) return v;
  QVec r;
  for (auto& x : v) r.push_back(x / g);
  for (auto& x : r)
    if (!x.is_zero()) {
      if (x.sign() < 0)
        for (auto& y : r) y = -y;
      break;
    }
  return r;
}

}  // namespace fh
