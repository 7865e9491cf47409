#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "holo/fox.hpp"
#include "holo/graded_lie.hpp"
#include "holo/magnus.hpp"
#include "holo/matrix.hpp"
#include "holo/presentation.hpp"
#include "holo/series.hpp"

namespace holo {

/// A presentation whose Jacobian of augmented Fox derivatives is in
/// staircase form, together with the homology bookkeeping derived from
/// it. Generator and relator indices are 1-based.
struct EchelonPresentation {
  GroupPresentation base;
  std::vector<Word> words;    // transformed relators w_k
  ZMatrix transform;          // C with w_k = prod_l r_l^{C(l-1,k-1)}, C in GL(m,Z)
  ZMatrix jacobian_reduced;   // staircase Jacobian (eps_i(w_k))
  std::vector<int> pivots;    // pivot generator indices i_1 < ... < i_d
  std::vector<int> h1_basis;  // non-pivot generator indices (b of them)
  QMatrix projection;         // b x n matrix of pi: class of x_s in column s
  std::vector<int> h2_basis;  // relator indices d+1 .. m

  int generator_count() const { return base.generator_count(); }
  int rank_d() const { return static_cast<int>(pivots.size()); }
  int betti1() const { return static_cast<int>(h1_basis.size()); }
};

/// Builds an echelon presentation: unimodular row reduction of the
/// Jacobian, replacement relators w_k = prod r_l^{c_{l,k}}, and the
/// projection onto the h1 basis by back-substitution. Free presentations
/// come out with d = 0 and the identity projection.
inline EchelonPresentation echelonize(const GroupPresentation& p) {
  const int n = p.generator_count();
  const int m = p.relator_count();
  ZMatrix jac(m, n);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i) jac(k, i) = exponent_sum(p.relators[k], i + 1);
  ZEchelon ech = z_unimodular_echelon(jac);

  EchelonPresentation out;
  out.base = p;
  out.jacobian_reduced = ech.reduced;
  // C is stored so that C(l,k) is the exponent of r_l inside w_k
  out.transform = ZMatrix(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) out.transform(l, k) = ech.transform(k, l);
  for (int k = 0; k < m; ++k) {
    Word w;
    for (int l = 0; l < m; ++l) {
      long e = static_cast<long>(ech.transform(k, l));
      if (e != 0) w *= p.relators[l].pow(e);
    }
    out.words.push_back(std::move(w));
  }

  for (int k = 0; k < m; ++k) {
    if (out.jacobian_reduced.row_is_zero(k)) break;
    int c = 0;
    while (out.jacobian_reduced(k, c) == 0) ++c;
    out.pivots.push_back(c + 1);
  }
  const int d = static_cast<int>(out.pivots.size());
  for (int i = 1, pi = 0; i <= n; ++i) {
    if (pi < d && out.pivots[pi] == i)
      ++pi;
    else
      out.h1_basis.push_back(i);
  }
  for (int k = d + 1; k <= m; ++k) out.h2_basis.push_back(k);

  // classes of the generators in the h1 basis, by back-substitution
  const int b = static_cast<int>(out.h1_basis.size());
  std::vector<std::vector<Q>> cls(n, std::vector<Q>(b));
  for (int j = 0; j < b; ++j) cls[out.h1_basis[j] - 1][j] = 1;
  for (int k = d - 1; k >= 0; --k) {
    int piv = out.pivots[k] - 1;
    std::vector<Q> acc(b);
    for (int c = piv + 1; c < n; ++c) {
      const Z& coeff = out.jacobian_reduced(k, c);
      if (coeff == 0) continue;
      for (int j = 0; j < b; ++j) acc[j] += Q(coeff) * cls[c][j];
    }
    Q lead = Q(out.jacobian_reduced(k, piv));
    for (int j = 0; j < b; ++j) cls[piv][j] = -acc[j] / lead;
  }
  out.projection = QMatrix(b, n);
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < b; ++j) out.projection(j, s) = cls[s][j];
  return out;
}

/// Cup products of degree-1 classes, evaluated on the h2 basis:
/// value(i,j,k) = (u_i cup u_j, w_k) = kappa(w_k)_{i,j}.
struct CupProductTable {
  int b = 0;
  std::vector<int> classes;       // relator indices d+1 .. m
  std::vector<QMatrix> matrices;  // per class, b x b antisymmetric

  /// 1-based i < j <= b; k is a relator index from `classes`.
  const Q& value(int i, int j, int k) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c] == k) return matrices[c](i - 1, j - 1);
    throw std::out_of_range("no such second-homology class");
  }
};

inline CupProductTable cup_table(const EchelonPresentation& e) {
  CupProductTable out;
  out.b = e.betti1();
  for (int k : e.h2_basis) {
    out.classes.push_back(k);
    out.matrices.push_back(kappa2(e.words[k - 1], e.projection));
  }
  return out;
}

/// Holonomy Lie algebra presentation: free Lie algebra on the h1 basis
/// modulo the quadratic elements kappa_2(w_k), k = d+1..m. Relators
/// whose kappa_2 vanishes contribute nothing and are reported.
struct HolonomyPresentation {
  GradedLiePresentation lie_presentation;
  std::vector<int> dropped_relators;  // w_k with kappa_2(w_k) = 0
};

inline HolonomyPresentation holonomy_presentation(const EchelonPresentation& e) {
  HolonomyPresentation out;
  const int b = e.betti1();
  out.lie_presentation.generators = b;
  for (int k : e.h2_basis) {
    QMatrix kap = kappa2(e.words[k - 1], e.projection);
    LieElement rel{b, {}};
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) rel.add(mono_of({i + 1, j + 1}), kap(i, j));
    if (rel.is_zero())
      out.dropped_relators.push_back(k);
    else
      out.lie_presentation.relations.push_back(std::move(rel));
  }
  return out;
}

/// Graded rank report for the holonomy Lie algebra h = h(G;k).
struct RankReport {
  std::vector<int> phibar;            // dim h_k, 1..N
  std::vector<int> thetabar;          // dim (h/h'')_k, 1..N
  std::optional<int> derived_level;   // extra solvable quotient, if requested
  std::vector<int> solvable_dims;     // dim (h/h^(i))_k for that level
  RationalSeries uh_series{0};        // Hilb(U(h), t) through N
  std::vector<int> dropped_relators;
};

inline RankReport graded_invariants(const EchelonPresentation& e, int max_degree,
                                    std::optional<int> derived_level = std::nullopt) {
  HolonomyPresentation hp = holonomy_presentation(e);
  GradedLieAlgebra h(hp.lie_presentation, max_degree);
  RankReport out;
  out.phibar = h.dims();
  out.thetabar = h.derived_dims(2).quotient;
  if (derived_level) {
    out.derived_level = derived_level;
    out.solvable_dims = h.derived_dims(*derived_level).quotient;
  }
  out.uh_series = pbw_series(h.dims(), max_degree);
  out.dropped_relators = hp.dropped_relators;
  return out;
}

/// One-relator Massey product value via the Magnus expansion: if all the
/// proper-subword coefficients eps_{i_s..i_{t-1}}(r) vanish, the Massey
/// product <-u_{i_1},...,-u_{i_k}> evaluates on [r] to eps_I(r).
struct MasseyResult {
  bool conditions_hold = false;
  std::optional<std::pair<int, int>> failing_condition;  // (s,t), 1-based
  Q value;  // eps_I(r) when the conditions hold
};

inline MasseyResult massey_onerelator(const Word& r, const std::vector<int>& index_seq) {
  if (index_seq.size() < 3)
    throw std::invalid_argument("massey: index sequence must have length >= 3");
  for (int i = 1; i <= r.max_generator(); ++i)
    if (exponent_sum(r, i) != 0)
      throw std::invalid_argument("massey: relator is not a commutator word");
  const int k = static_cast<int>(index_seq.size());
  MasseyResult out;
  for (int s = 1; s <= k; ++s)
    for (int t = s + 1; t <= k + 1; ++t) {
      if (s == 1 && t == k + 1) continue;
      std::vector<int> sub(index_seq.begin() + (s - 1), index_seq.begin() + (t - 1));
      if (epsilon_seq(r, sub) != 0) {
        out.failing_condition = {s, t};
        return out;
      }
    }
  out.conditions_hold = true;
  out.value = epsilon_seq(r, index_seq);
  return out;
}

}  // namespace holo
