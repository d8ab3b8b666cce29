#pragma once

#include <cstddef>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit::algebra {

// Dense matrix with polynomial entries, all sharing one ring.
class SymbolicMatrix {
 public:
  SymbolicMatrix(const Ring& ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Ring& ring() const noexcept { return ring_; }

  const Polynomial& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Polynomial value);

  // Row/column submatrix with indices in the given order.
  SymbolicMatrix submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

// Determinant by division-free dynamic programming over column subsets
// (O(2^k k) polynomial operations for a k x k matrix).  Throws for
// non-square input or k > 16.
Polynomial determinant(const SymbolicMatrix& m);

// Determinant of the submatrix formed by the bottom i rows (in their natural
// top-to-bottom order) and the first i columns.
Polynomial lower_left_minor(const SymbolicMatrix& m, std::size_t i);

}  // namespace fsplit::algebra
