#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gds/rational.hpp"

namespace gds::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Exact Gauss-Jordan elimination over the first `cols` columns (all columns
/// when cols is npos). Remaining columns are carried along, e.g. a right-hand side.
inline Echelon row_reduce(Matrix m, std::size_t cols = static_cast<std::size_t>(-1)) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t width = rows ? m[0].size() : 0;
  if (cols > width) cols = width;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < width; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < width; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Basis of {x : m x = 0}; one vector per free column.
inline std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  if (m.empty()) {
    std::vector<Vector> basis;
    for (std::size_t c = 0; c < cols; ++c) {
      Vector v(cols, 0);
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution of a x = b when it exists and is unique.
inline std::optional<Vector> solve_unique(const Matrix& a, const Vector& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = row_reduce(std::move(aug), cols);
  if (e.rank() != cols) return std::nullopt;
  for (std::size_t i = e.rank(); i < e.reduced.size(); ++i)
    if (e.reduced[i][cols] != 0) return std::nullopt;
  Vector x(cols, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced[r][cols];
  return x;
}

}  // namespace gds::linalg
