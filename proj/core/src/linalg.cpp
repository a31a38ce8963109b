#include "klrbraid/linalg.hpp"

#include <algorithm>

namespace klrbraid {

SparseVec sparse_axpy(const SparseVec& x, const mpq_class& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      mpq_class c = x[i].second + a * y[j].second;
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec SparseEchelon::reduce_leading(SparseVec v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.back().first);
    if (it == rows_.end()) break;
    mpq_class a = -v.back().second;
    v = sparse_axpy(v, a, it->second);
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  mpq_class lead = v.back().second;
  if (lead != 1)
    for (auto& [c, x] : v) x /= lead;
  int col = v.back().first;
  rows_.emplace(col, std::move(v));
  return true;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  // Walk terms from the top; every term above `bound` is already a non-pivot.
  int idx = static_cast<int>(v.size()) - 1;
  while (idx >= 0) {
    auto it = rows_.find(v[idx].first);
    if (it == rows_.end()) {
      --idx;
      continue;
    }
    int col = v[idx].first;
    mpq_class a = -v[idx].second;
    v = sparse_axpy(v, a, it->second);
    // restart just below col
    auto pos = std::lower_bound(v.begin(), v.end(), col,
                                [](const auto& e, int c) { return e.first < c; });
    idx = static_cast<int>(pos - v.begin()) - 1;
  }
  return v;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  int r = 0;
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    std::uint64_t inv = powmod(m[r][c] % p, p - 2, p);
    for (int j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j] % p, inv, p);
    for (int i = r + 1; i < rows; ++i) {
      std::uint64_t f = m[i][c] % p;
      if (!f) continue;
      for (int j = c; j < cols; ++j) m[i][j] = (m[i][j] % p + p - mulmod(f, m[r][j], p)) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace klrbraid
