#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "rees/errors.hpp"

namespace rees {

/// Sparse vector over K: column index -> nonzero entry.
template <class K>
using SparseVec = std::map<std::size_t, K>;

template <class K>
void axpy(SparseVec<K>& y, const K& a, const SparseVec<K>& x) {
  // y += a * x
  for (const auto& [j, v] : x) {
    auto [it, inserted] = y.try_emplace(j, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Row echelon form built incrementally; pivots sit on the lowest column of each row.
template <class K>
class Echelon {
 public:
  /// Reduces `v` against the stored pivots; the residual has no entry on a pivot column.
  SparseVec<K> reduce(SparseVec<K> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      std::size_t col = it->first;
      K factor = -it->second;
      axpy(v, factor, rows_[p->second]);
      it = v.upper_bound(col);
    }
    return v;
  }

  /// Inserts `v` if independent; returns true when the rank grew.
  bool insert(SparseVec<K> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    K inv = K(1) / v.begin()->second;
    for (auto& [j, x] : v) x *= inv;
    pivots_.emplace(v.begin()->first, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

  /// Basis of {x : row·x = 0 for every stored row} in a space of `ncols` columns.
  std::vector<SparseVec<K>> kernel(std::size_t ncols) const {
    // back-substitute to reduced echelon form, highest pivot first
    std::vector<SparseVec<K>> red = rows_;
    std::vector<std::size_t> order;
    for (const auto& [col, idx] : pivots_) order.push_back(idx);
    for (auto oi = order.rbegin(); oi != order.rend(); ++oi) {
      SparseVec<K>& row = red[*oi];
      std::size_t pc = row.begin()->first;
      auto it = row.upper_bound(pc);
      while (it != row.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
          ++it;
          continue;
        }
        std::size_t col = it->first;
        K factor = -it->second;
        axpy(row, factor, red[p->second]);
        it = row.upper_bound(col);
      }
    }
    std::vector<SparseVec<K>> basis;
    std::map<std::size_t, std::vector<std::pair<std::size_t, K>>> by_free;
    for (const auto& [pc, idx] : pivots_)
      for (const auto& [j, x] : red[idx])
        if (j != pc) by_free[j].emplace_back(pc, x);
    for (std::size_t f = 0; f < ncols; ++f) {
      if (pivots_.count(f)) continue;
      SparseVec<K> v;
      v.emplace(f, K(1));
      auto it = by_free.find(f);
      if (it != by_free.end())
        for (const auto& [pc, x] : it->second) v.emplace(pc, -x);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::vector<SparseVec<K>> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

/// Solves the dense square system A x = b; nullopt when A is singular.
template <class K>
std::optional<std::vector<K>> solve_dense(std::vector<std::vector<K>> a, std::vector<K> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    K inv = K(1) / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      K f = a[r][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

}  // namespace rees
