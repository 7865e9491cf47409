#pragma once

#include <map>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Sparse vector over Q with int columns, kept sorted by column.
using SparseVec = std::vector<std::pair<int, Q>>;

inline void sparse_add(SparseVec& a, const SparseVec& b, const Q& factor) {
  if (factor == 0 || b.empty()) return;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * factor);
      ++j;
    } else {
      Q v = a[i].second + b[j].second * factor;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

/// Incrementally built staircase basis of a subspace of Q^N, for exact
/// rank computation and normal forms. Rows are monic and indexed by
/// their leading column.
class RowSpace {
 public:
  int rank() const { return static_cast<int>(rows_.size()); }

  const std::map<int, SparseVec>& rows() const { return rows_; }

  bool contains_pivot(int col) const { return rows_.count(col) != 0; }

  /// Reduces v against the staircase; the residual has no support on
  /// pivot columns of stored rows.
  SparseVec reduce(SparseVec v) const {
    SparseVec out;
    std::size_t scan = 0;
    while (scan < v.size()) {
      auto it = rows_.find(v[scan].first);
      if (it == rows_.end()) {
        out.push_back(v[scan]);
        ++scan;
        continue;
      }
      Q f = -v[scan].second;
      SparseVec tail(v.begin() + scan, v.end());
      sparse_add(tail, it->second, f);
      v = std::move(tail);
      scan = 0;
    }
    return out;
  }

  /// Inserts v if independent of the current rows; returns whether the
  /// rank grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Q inv = Q(1) / v.front().second;
    for (auto& [c, q] : v) q *= inv;
    int pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace holo
