#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/matrix.hpp"
#include "holo/rowspace.hpp"

namespace holo {

/// A finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k, indices 0-based internally.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<std::vector<Q>>> c;

  explicit StructureConstants(int n)
      : dim(n),
        c(n, std::vector<std::vector<Q>>(n, std::vector<Q>(n))) {}

  void set_bracket(int i, int j, int k, const Q& v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  }

  /// [u, v] in coordinates.
  std::vector<Q> bracket(const std::vector<Q>& u, const std::vector<Q>& v) const {
    std::vector<Q> out(dim);
    for (int i = 0; i < dim; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (v[j] == 0) continue;
        Q f = u[i] * v[j];
        for (int k = 0; k < dim; ++k)
          if (c[i][j][k] != 0) out[k] += f * c[i][j][k];
      }
    }
    return out;
  }
};

struct LieVerdict {
  bool ok = false;
  std::string violation;  // first failure, empty when ok
};

inline LieVerdict validate(const StructureConstants& sc) {
  const int n = sc.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (sc.c[i][j][k] != -sc.c[j][i][k])
          return {false, "antisymmetry fails at [e" + std::to_string(i + 1) + ",e" +
                             std::to_string(j + 1) + "]"};
  std::vector<Q> ei(n), ej(n), ek(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::fill(ei.begin(), ei.end(), Q(0));
        std::fill(ej.begin(), ej.end(), Q(0));
        std::fill(ek.begin(), ek.end(), Q(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        std::vector<Q> jac = sc.bracket(ei, sc.bracket(ej, ek));
        std::vector<Q> t2 = sc.bracket(ej, sc.bracket(ek, ei));
        std::vector<Q> t3 = sc.bracket(ek, sc.bracket(ei, ej));
        for (int s = 0; s < n; ++s) {
          Q sum = jac[s] + t2[s] + t3[s];
          if (sum != 0)
            return {false, "jacobi fails on (e" + std::to_string(i + 1) + ",e" +
                               std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")"};
        }
      }
  return {true, ""};
}

namespace detail {

inline SparseVec to_sparse_vec(const std::vector<Q>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

/// Span of brackets [A, B] for spanning sets A, B (coordinate vectors).
inline std::vector<std::vector<Q>> bracket_span(const StructureConstants& sc,
                                                const std::vector<std::vector<Q>>& a,
                                                const std::vector<std::vector<Q>>& b) {
  RowSpace space;
  std::vector<std::vector<Q>> out;
  for (const auto& u : a)
    for (const auto& v : b) {
      std::vector<Q> w = sc.bracket(u, v);
      if (space.insert(to_sparse_vec(w))) out.push_back(std::move(w));
    }
  return out;
}

inline std::vector<std::vector<Q>> full_basis(int n) {
  std::vector<std::vector<Q>> out(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace detail

struct LcsResult {
  std::vector<int> lcs_dims;  // dim Gamma_1, Gamma_2, ... down to 0
  StructureConstants gr;      // associated graded in an adapted basis
  // adapted basis vectors, by filtration degree then position
  std::vector<std::vector<std::vector<Q>>> adapted;
};

/// Lower central series Gamma_k(g) = [Gamma_{k-1}(g), g] of a nilpotent
/// algebra, and its associated graded. Throws std::domain_error when the
/// series stabilizes away from zero.
inline LcsResult lcs_and_gr(const StructureConstants& sc) {
  const int n = sc.dim;
  auto basis = detail::full_basis(n);
  // spanning sets for the terms of the series
  std::vector<std::vector<std::vector<Q>>> gamma{basis};
  while (true) {
    auto next = detail::bracket_span(sc, gamma.back(), basis);
    if (next.empty()) break;
    if (next.size() == gamma.back().size())
      throw std::domain_error("algebra is not nilpotent: LCS stabilizes");
    gamma.push_back(std::move(next));
  }
  const int length = static_cast<int>(gamma.size());

  LcsResult out{{}, StructureConstants(n), {}};
  for (const auto& g : gamma) out.lcs_dims.push_back(static_cast<int>(g.size()));
  out.lcs_dims.push_back(0);

  // adapted basis: complements of Gamma_{k+1} inside Gamma_k, chosen by
  // echelon elimination in input-basis order; stairs[k] spans Gamma_{k+1}
  std::vector<RowSpace> stairs(length);
  for (int k = 0; k < length; ++k) {
    if (k + 1 < length)
      for (const auto& v : gamma[k + 1]) stairs[k].insert(detail::to_sparse_vec(v));
  }
  out.adapted.resize(length);
  std::vector<std::pair<int, int>> degree_of;  // flat index -> (deg, pos)
  std::vector<std::vector<Q>> flat;
  for (int k = 0; k < length; ++k) {
    RowSpace filled = stairs[k];
    for (const auto& v : gamma[k]) {
      if (filled.insert(detail::to_sparse_vec(v))) {
        out.adapted[k].push_back(v);
        degree_of.emplace_back(k + 1, static_cast<int>(out.adapted[k].size()) - 1);
        flat.push_back(v);
      }
    }
  }

  // change of basis: express a coordinate vector in the adapted basis
  const int total = static_cast<int>(flat.size());
  QMatrix pmat(total, n);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < n; ++c) pmat(r, c) = flat[r][c];
  QEchelon pe = q_echelon(pmat);  // transform * pmat = rref
  auto in_adapted = [&](const std::vector<Q>& v) {
    // solve x * pmat = v via the rref: x = y * transform with y read off pivots
    std::vector<Q> residual = v, coords(total);
    for (int r = 0; r < pe.rank; ++r) {
      int col = pe.pivots[r];
      Q f = residual[col];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) residual[c] -= f * pe.echelon(r, c);
      for (int s = 0; s < total; ++s) coords[s] += f * pe.transform(r, s);
    }
    for (const Q& rc : residual)
      if (rc != 0) throw std::logic_error("vector outside the filtration span");
    return coords;
  };

  // gr structure constants: bracket adapted vectors, project into the
  // correct graded piece, discard lower (deeper) filtration terms
  std::vector<int> offset(length + 1, 0);
  for (int k = 0; k < length; ++k)
    offset[k + 1] = offset[k] + static_cast<int>(out.adapted[k].size());
  for (int r = 0; r < total; ++r)
    for (int s = 0; s < total; ++s) {
      auto [da, pa] = degree_of[r];
      auto [db, pb] = degree_of[s];
      std::vector<Q> br = sc.bracket(flat[r], flat[s]);
      std::vector<Q> coords = in_adapted(br);
      // keep only the component in degree da + db
      if (da + db <= length)
        for (int u = offset[da + db - 1]; u < offset[da + db]; ++u)
          out.gr.c[r][s][u] = coords[u];
    }
  return out;
}

struct ObstructionProfile {
  int center_dim = 0;
  int gr_center_dim = 0;
  std::vector<int> derived_dims;     // dim g^(1), g^(2), ... until 0
  std::vector<int> gr_derived_dims;
  bool metabelian = false;           // g'' = 0
  bool gr_metabelian = false;
  bool obstruction_found = false;    // any mismatch certifies g != gr(g)
};

namespace detail {

inline int center_dim(const StructureConstants& sc) {
  // kernel of x -> (ad x): rows indexed by basis, columns by (j,k)
  const int n = sc.dim;
  QMatrix ad(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) ad(i, j * n + k) = sc.c[i][j][k];
  return n - q_echelon(ad).rank;
}

inline std::vector<int> derived_dims_of(const StructureConstants& sc) {
  std::vector<int> out;
  auto cur = full_basis(sc.dim);
  while (true) {
    cur = bracket_span(sc, cur, cur);
    out.push_back(static_cast<int>(cur.size()));
    if (cur.empty()) break;
    if (out.size() > 64) throw std::logic_error("derived series does not terminate");
  }
  return out;
}

}  // namespace detail

/// Necessary-condition comparison of g with gr(g): center dimension,
/// derived series dimensions, metabelian flags. A mismatch certifies
/// that g is not isomorphic to gr(g); agreement certifies nothing.
inline ObstructionProfile obstruction_profile(const StructureConstants& sc) {
  LcsResult lcs = lcs_and_gr(sc);
  ObstructionProfile out;
  out.center_dim = detail::center_dim(sc);
  out.gr_center_dim = detail::center_dim(lcs.gr);
  out.derived_dims = detail::derived_dims_of(sc);
  out.gr_derived_dims = detail::derived_dims_of(lcs.gr);
  auto metabelian = [](const std::vector<int>& d) {
    return d.size() < 2 || d[1] == 0;
  };
  out.metabelian = metabelian(out.derived_dims);
  out.gr_metabelian = metabelian(out.gr_derived_dims);
  out.obstruction_found = out.center_dim != out.gr_center_dim ||
                          out.derived_dims != out.gr_derived_dims ||
                          out.metabelian != out.gr_metabelian;
  return out;
}

/// Malcev Lie algebra of a 2-step nilpotent group presented by
/// [x_i, x_j] = prod_k y_k^{c^k_{i,j}}: the (n+m)-dimensional algebra
/// with [e_i, e_j] = sum_k c^k_{i,j} e_{n+k} and central e_{n+1..n+m}.
/// The tensor c is indexed c[k][i][j], 0-based, and must satisfy
/// c[k][j][i] = -c[k][i][j].
inline StructureConstants two_step_malcev(int n, int m,
                                          const std::vector<std::vector<std::vector<Z>>>& c) {
  if (static_cast<int>(c.size()) != m)
    throw std::invalid_argument("two_step_malcev: tensor has wrong commutator rank");
  StructureConstants sc(n + m);
  for (int k = 0; k < m; ++k) {
    if (static_cast<int>(c[k].size()) != n)
      throw std::invalid_argument("two_step_malcev: tensor has wrong rank");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (c[k][i][j] != -c[k][j][i])
          throw std::invalid_argument("two_step_malcev: tensor is not antisymmetric");
        sc.c[i][j][n + k] = Q(c[k][i][j]);
      }
  }
  return sc;
}

}  // namespace holo
