#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "klrbraid/scalars.hpp"

namespace klrbraid {

inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_zero(const RationalQ& x) { return x.is_zero(); }

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    F inv = F(1) / m[r][c];
    for (int j = c; j < cols; ++j)
      if (!is_zero(m[r][j])) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

// Indices of a lexicographically first maximal set of independent rows.
template <class F>
std::vector<int> independent_rows(const Matrix<F>& m) {
  if (m.empty()) return {};
  Matrix<F> t(m[0].size(), std::vector<F>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return rref(t);
}

// Some solution of a x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  Matrix<F> aug(rows, std::vector<F>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  std::vector<F> x(cols);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(cols)) return std::nullopt;
    x[piv[r]] = aug[r][cols];
  }
  return x;
}

// Basis of {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a, int cols) {
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(cols);
    v[free] = F(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  const size_t n = a.size();
  Matrix<F> aug(n, std::vector<F>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = F(1);
  }
  std::vector<int> piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
  Matrix<F> inv(n, std::vector<F>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Sparse vector over Q, sorted by column; columns compare as ints and a
// larger column is a "higher" term.
using SparseVec = std::vector<std::pair<int, mpq_class>>;

SparseVec sparse_axpy(const SparseVec& x, const mpq_class& a, const SparseVec& y);  // x + a y

// Row echelon form built incrementally; each stored row is monic in its
// leading (largest) column.
class SparseEchelon {
 public:
  // Reduces v; returns true and stores it if it was independent.
  bool insert(SparseVec v);
  // Fully reduces v against stored rows.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows_.size(); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  SparseVec reduce_leading(SparseVec v) const;
  std::map<int, SparseVec> rows_;  // keyed by leading column
};

// Rank of an integer matrix modulo the prime p.
int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace klrbraid
