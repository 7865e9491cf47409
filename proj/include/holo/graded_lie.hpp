#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holo/lie.hpp"
#include "holo/rowspace.hpp"

namespace holo {

/// A graded Lie algebra presentation: generators in degree 1, plus
/// homogeneous relations. Holonomy presentations are quadratic; initial
/// form presentations can carry any degrees >= 1.
struct GradedLiePresentation {
  int generators = 0;
  std::vector<LieElement> relations;
};

struct DerivedDims {
  std::vector<int> subalgebra;  // dim g^(i) per degree 1..N
  std::vector<int> quotient;    // dim (g/g^(i)) per degree 1..N
};

/// Finitely presented graded Lie algebra, computed degree by degree as a
/// quotient of the free Lie algebra in Lyndon coordinates. The ideal is
/// built by the recursion I_n = span(relations of degree n) + [V, I_{n-1}];
/// coset bases are the Lyndon words off the ideal's pivot columns.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra(GradedLiePresentation pres, int max_degree)
      : pres_(std::move(pres)),
        max_degree_(max_degree),
        lie_(std::make_shared<FreeLie>(pres_.generators)) {
    if (max_degree < 1) throw std::out_of_range("max degree must be >= 1");
    build();
  }

  int generators() const { return pres_.generators; }
  int max_degree() const { return max_degree_; }
  const FreeLie& lie() const { return *lie_; }
  const GradedLiePresentation& presentation() const { return pres_; }

  const std::vector<int>& dims() const { return dims_; }
  int dim(int k) const { return dims_.at(k - 1); }

  /// Coset basis labels at degree k: Lyndon words not in the ideal's
  /// pivot set, in lexicographic order.
  const std::vector<Mono>& basis_labels(int k) const { return basis_.at(k - 1); }

  /// Structure constants for degrees (a, b): entry [p][q] is the coset
  /// coordinate vector of [basis_a[p], basis_b[q]] in degree a+b.
  const std::vector<std::vector<SparseVec>>& structure(int a, int b) const {
    if (a < 1 || b < 1 || a + b > max_degree_)
      throw std::out_of_range("structure constants outside computed range");
    std::scoped_lock lock(cache_mutex_);
    auto key = std::make_pair(a, b);
    auto it = structure_.find(key);
    if (it != structure_.end()) return it->second;

    const auto& ba = basis_[a - 1];
    const auto& bb = basis_[b - 1];
    std::vector<std::vector<SparseVec>> table(ba.size(),
                                              std::vector<SparseVec>(bb.size()));
    for (std::size_t p = 0; p < ba.size(); ++p)
      for (std::size_t q = 0; q < bb.size(); ++q)
        table[p][q] = to_coset(lie_->bracket_basis(ba[p], bb[q]), a + b);
    return structure_.emplace(key, std::move(table)).first->second;
  }

  /// Bracket of coset coordinate vectors of degrees a and b.
  SparseVec bracket_coords(int a, const SparseVec& va, int b, const SparseVec& vb) const {
    const auto& table = structure(a, b);
    std::map<int, Q> acc;
    for (const auto& [p, cp] : va)
      for (const auto& [q, cq] : vb) {
        Q f = cp * cq;
        for (const auto& [r, cr] : table[p][q]) {
          Q& v = acc[r];
          v += f * cr;
          if (v == 0) acc.erase(r);
        }
      }
    return {acc.begin(), acc.end()};
  }

  /// Dimensions of the i-th derived subalgebra and of the solvable
  /// quotient g/g^(i), per degree through max_degree.
  DerivedDims derived_dims(int level) const {
    if (level < 1) throw std::out_of_range("derived level must be >= 1");
    const int N = max_degree_;
    // spans of the current derived subalgebra, per degree, in coset coords
    std::vector<RowSpace> cur(N);
    std::vector<std::vector<SparseVec>> cur_rows(N);
    // level 1: brackets of all pairs of algebra basis vectors
    for (int a = 1; a < N; ++a)
      for (int b = a; a + b <= N; ++b) {
        const auto& table = structure(a, b);
        for (const auto& row : table)
          for (const auto& vec : row)
            if (!vec.empty()) cur[a + b - 1].insert(vec);
      }
    collect_rows(cur, cur_rows);
    for (int l = 2; l <= level; ++l) {
      std::vector<RowSpace> next(N);
      for (int a = 1; a < N; ++a)
        for (int b = a; a + b <= N; ++b)
          for (std::size_t p = 0; p < cur_rows[a - 1].size(); ++p)
            for (std::size_t q = (a == b ? p + 1 : 0); q < cur_rows[b - 1].size(); ++q) {
              SparseVec v = bracket_coords(a, cur_rows[a - 1][p], b, cur_rows[b - 1][q]);
              if (!v.empty()) next[a + b - 1].insert(std::move(v));
            }
      cur = std::move(next);
      collect_rows(cur, cur_rows);
    }
    DerivedDims out;
    for (int k = 1; k <= N; ++k) {
      out.subalgebra.push_back(cur[k - 1].rank());
      out.quotient.push_back(dims_[k - 1] - cur[k - 1].rank());
    }
    return out;
  }

  /// Normal form of a free-Lie element: reduce modulo the ideal, then
  /// read coset coordinates at its degree.
  SparseVec to_coset(const LieElement& e, int degree) const {
    SparseVec v;
    for (const auto& [w, c] : e.coeff) {
      if (static_cast<int>(w.size()) != degree)
        throw std::invalid_argument("to_coset: degree mismatch");
      v.emplace_back(lie_->lyndon_index(w), c);
    }
    SparseVec reduced = ideal_[degree - 1].reduce(std::move(v));
    SparseVec out;
    for (const auto& [col, c] : reduced) out.emplace_back(coset_index_.at(degree - 1).at(col), c);
    return out;
  }

 private:
  static void collect_rows(const std::vector<RowSpace>& spaces,
                           std::vector<std::vector<SparseVec>>& rows) {
    rows.assign(spaces.size(), {});
    for (std::size_t k = 0; k < spaces.size(); ++k)
      for (const auto& [piv, row] : spaces[k].rows()) rows[k].push_back(row);
  }

  void build() {
    const int n = pres_.generators;
    std::vector<std::vector<LieElement>> by_degree(max_degree_);
    for (const LieElement& r : pres_.relations) {
      if (r.is_zero()) continue;
      auto d = r.homogeneous_degree();
      if (!d) throw std::invalid_argument("graded quotient: non-homogeneous relation");
      if (*d <= max_degree_) by_degree[*d - 1].push_back(r);
    }

    ideal_.resize(max_degree_);
    for (int k = 1; k <= max_degree_; ++k) {
      RowSpace& space = ideal_[k - 1];
      for (const LieElement& r : by_degree[k - 1]) space.insert(to_sparse(r));
      if (k > 1) {
        for (const auto& [piv, row] : ideal_[k - 2].rows()) {
          const auto& words = lie_->lyndon_words(k - 1);
          for (int j = 1; j <= n; ++j) {
            Mono xj = mono_of({j});
            LieElement br{n, {}};
            for (const auto& [col, c] : row) {
              LieElement t = lie_->bracket_basis(xj, words[col]);
              t *= c;
              br += t;
            }
            if (!br.is_zero()) space.insert(to_sparse(br));
          }
        }
      }
      long witt = static_cast<long>(lie_->witt_dimension(k));
      dims_.push_back(static_cast<int>(witt - space.rank()));
      std::vector<Mono> labels;
      std::map<int, int> index;
      const auto& words = lie_->lyndon_words(k);
      for (std::size_t c = 0; c < words.size(); ++c) {
        if (space.contains_pivot(static_cast<int>(c))) continue;
        index[static_cast<int>(c)] = static_cast<int>(labels.size());
        labels.push_back(words[c]);
      }
      basis_.push_back(std::move(labels));
      coset_index_.push_back(std::move(index));
    }
  }

  SparseVec to_sparse(const LieElement& e) const {
    SparseVec v;
    for (const auto& [w, c] : e.coeff) v.emplace_back(lie_->lyndon_index(w), c);
    return v;
  }

  GradedLiePresentation pres_;
  int max_degree_;
  std::shared_ptr<FreeLie> lie_;
  std::vector<RowSpace> ideal_;
  std::vector<int> dims_;
  std::vector<std::vector<Mono>> basis_;
  std::vector<std::map<int, int>> coset_index_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<std::vector<SparseVec>>> structure_;
};

inline GradedLieAlgebra graded_quotient(GradedLiePresentation p, int max_degree = 8) {
  return GradedLieAlgebra(std::move(p), max_degree);
}

}  // namespace holo
