#pragma once

#include <optional>
#include <vector>

#include "linf/rational.hpp"

namespace linf {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>; // row-major, possibly empty

inline MatQ zeroMatrix(int rows, int cols) { return MatQ(rows, VecQ(cols)); }

inline int rowCount(const MatQ &m) { return static_cast<int>(m.size()); }
inline int colCount(const MatQ &m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

inline VecQ matVec(const MatQ &m, const VecQ &x) {
  VecQ y(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!m[i][j].isZero() && !x[j].isZero()) y[i] += m[i][j] * x[j];
  return y;
}

inline MatQ matMul(const MatQ &a, const MatQ &b) {
  MatQ c = zeroMatrix(rowCount(a), colCount(b));
  for (int i = 0; i < rowCount(a); ++i)
    for (int k = 0; k < colCount(a); ++k)
      if (!a[i][k].isZero())
        for (int j = 0; j < colCount(b); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

struct Rref {
  MatQ mat;
  std::vector<int> pivotCols;
};

/// Reduced row echelon form; deterministic first-nonzero pivoting.
inline Rref rref(MatQ m) {
  Rref r;
  int rows = rowCount(m), cols = colCount(m);
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (!m[i][col].isZero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[lead], m[piv]);
    Rational inv = inverse(m[lead][col]);
    for (int j = col; j < cols; ++j) m[lead][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == lead || m[i][col].isZero()) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[lead][j];
    }
    r.pivotCols.push_back(col);
    ++lead;
  }
  r.mat = std::move(m);
  return r;
}

inline int rank(const MatQ &m) { return static_cast<int>(rref(m).pivotCols.size()); }

/// Basis of the null space of m (free variables set to 1 one at a time).
inline std::vector<VecQ> kernelBasis(const MatQ &m, int cols) {
  Rref r = rref(m);
  std::vector<bool> isPivot(cols, false);
  for (int c : r.pivotCols) isPivot[c] = true;
  std::vector<VecQ> out;
  for (int free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    VecQ v(cols);
    v[free] = Rational(1);
    for (size_t p = 0; p < r.pivotCols.size(); ++p)
      v[r.pivotCols[p]] = -r.mat[p][free];
    out.push_back(std::move(v));
  }
  return out;
}

/// Columns of m that span its column space (original columns, not reduced).
inline std::vector<VecQ> imageBasis(const MatQ &m) {
  std::vector<VecQ> out;
  for (int c : rref(m).pivotCols) {
    VecQ col(rowCount(m));
    for (int i = 0; i < rowCount(m); ++i) col[i] = m[i][c];
    out.push_back(std::move(col));
  }
  return out;
}

/// One solution of m x = b with free variables zero, or nullopt.
inline std::optional<VecQ> solve(const MatQ &m, const VecQ &b) {
  int rows = rowCount(m), cols = colCount(m);
  MatQ aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Rref r = rref(aug);
  VecQ x(cols);
  for (size_t p = 0; p < r.pivotCols.size(); ++p) {
    if (r.pivotCols[p] == cols) return std::nullopt; // pivot in the rhs column
    x[r.pivotCols[p]] = r.mat[p][cols];
  }
  return x;
}

/// True iff b lies in the column space of m.
inline bool inColumnSpace(const MatQ &m, const VecQ &b) { return solve(m, b).has_value(); }

inline MatQ fromColumns(const std::vector<VecQ> &cols, int rows) {
  MatQ m = zeroMatrix(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

} // namespace linf
