#pragma once

#include <cstddef>
#include <vector>

#include "gds/family.hpp"

namespace gds::instances {

/// Label of cell (i, j), both one-based, in a matrix with `cols` columns.
inline ElementId matrix_cell(std::size_t i, std::size_t j, std::size_t cols) {
  return (i - 1) * cols + j;
}

/// Rows then columns of a rows x cols matrix; S is the set of doubly
/// stochastic matrices when rows == cols and is empty otherwise.
inline SetFamily matrix_family(std::size_t rows, std::size_t cols) {
  std::vector<std::vector<ElementId>> blocks;
  for (std::size_t i = 1; i <= rows; ++i) {
    std::vector<ElementId> row;
    for (std::size_t j = 1; j <= cols; ++j) row.push_back(matrix_cell(i, j, cols));
    blocks.push_back(row);
  }
  for (std::size_t j = 1; j <= cols; ++j) {
    std::vector<ElementId> col;
    for (std::size_t i = 1; i <= rows; ++i) col.push_back(matrix_cell(i, j, cols));
    blocks.push_back(col);
  }
  return build_family(blocks);
}

/// Omega_k = {k, k + 1} for k < n and Omega_n = {n, 1}.
inline SetFamily cycle_family(std::size_t n) {
  std::vector<std::vector<ElementId>> blocks;
  for (ElementId k = 1; k < n; ++k) blocks.push_back({k, k + 1});
  blocks.push_back({n, 1});
  return build_family(blocks);
}

/// Omega_k = {k, k + 1} for k = 1..n.
inline SetFamily path_family(std::size_t n) {
  std::vector<std::vector<ElementId>> blocks;
  for (ElementId k = 1; k <= n; ++k) blocks.push_back({k, k + 1});
  return build_family(blocks);
}

/// Omega_k = {0, k, k + 1} for k = 1..m: triangles sharing the hub 0.
inline SetFamily fan_family(std::size_t m) {
  std::vector<std::vector<ElementId>> blocks;
  for (ElementId k = 1; k <= m; ++k) blocks.push_back({0, k, k + 1});
  return build_family(blocks);
}

/// A triangle {1,2,3} made of three pair blocks plus the separate block {4,5}.
/// S is the segment w = 1/2 on the triangle, w(4) + w(5) = 1.
inline SetFamily triangle_and_pair() {
  return build_family({{2, 3}, {1, 3}, {1, 2}, {4, 5}});
}

/// Pairwise disjoint blocks of sizes 1, 2, ..., count.
inline SetFamily disjoint_growing_family(std::size_t count) {
  std::vector<std::vector<ElementId>> blocks;
  ElementId next = 1;
  for (std::size_t k = 1; k <= count; ++k) {
    std::vector<ElementId> b;
    for (std::size_t i = 0; i < k; ++i) b.push_back(next++);
    blocks.push_back(b);
  }
  return build_family(blocks);
}

}  // namespace gds::instances
