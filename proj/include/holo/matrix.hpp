#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Dense matrix over an exact scalar type (Q or Z), row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(i, c) != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Q>;
using ZMatrix = Matrix<Z>;

inline QMatrix to_q(const ZMatrix& a) {
  QMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Q(a(i, j));
  return r;
}

struct QEchelon {
  QMatrix echelon;          // reduced row-echelon form
  std::vector<int> pivots;  // 0-based pivot columns, strictly increasing
  int rank = 0;
  QMatrix transform;        // transform * input == echelon
};

/// Gauss-Jordan over Q with transform accumulation. Pivot choice is the
/// first nonzero entry scanning top-to-bottom, no heuristics.
inline QEchelon q_echelon(QMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  QEchelon out;
  out.transform = QMatrix::identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a(piv, col) == 0) ++piv;
    if (piv == m) continue;
    if (piv != row) {
      a.swap_rows(piv, row);
      out.transform.swap_rows(piv, row);
    }
    Q inv = Q(1) / a(row, col);
    for (std::size_t j = 0; j < n; ++j) a(row, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) out.transform(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a(i, col) == 0) continue;
      Q f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(row, j);
      for (std::size_t j = 0; j < m; ++j)
        out.transform(i, j) -= f * out.transform(row, j);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.rank = static_cast<int>(out.pivots.size());
  out.echelon = std::move(a);
  return out;
}

struct ZEchelon {
  ZMatrix reduced;    // Hermite-style staircase
  ZMatrix transform;  // unimodular, transform * input == reduced
};

/// Row reduction over Z by unimodular operations. The result is a
/// staircase: nonzero rows first, pivot columns strictly increasing,
/// pivots positive, entries above a pivot reduced into [0, pivot).
inline ZEchelon z_unimodular_echelon(ZMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix u = ZMatrix::identity(m);
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Z& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) += f * u(src, j);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
    for (std::size_t j = 0; j < m; ++j) u(i, j) = -u(i, j);
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // gcd-chain the entries of this column below `row` into one pivot
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (a(i, col) == 0) continue;
        if (best == m || abs(a(i, col)) < abs(a(best, col))) best = i;
      }
      if (best == m) break;  // column clear
      if (best != row) {
        a.swap_rows(best, row);
        u.swap_rows(best, row);
      }
      bool cleared = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        Z qf = a(i, col) / a(row, col);  // truncated division
        add_multiple(i, row, -qf);
        if (a(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) negate_row(row);
    // reduce entries above the pivot into [0, pivot)
    const Z& p = a(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Z qf = a(i, col) / p;
      if (a(i, col) - qf * p < 0) qf -= 1;  // floor division
      if (qf != 0) add_multiple(i, row, -qf);
    }
    ++row;
  }
  return {std::move(a), std::move(u)};
}

/// Exact determinant by fraction-free elimination over Q.
inline Q q_determinant(QMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  Q det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      a.swap_rows(piv, col);
      det = -det;
    }
    det *= a(col, col);
    Q inv = Q(1) / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Q f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

inline Z z_determinant(const ZMatrix& a) {
  Q d = q_determinant(to_q(a));
  return q_num(d);
}

}  // namespace holo
