#include "fsplit/matrix.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace fsplit::algebra {

SymbolicMatrix::SymbolicMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial::zero(ring)) {}

const Polynomial& SymbolicMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return data_[r * cols_ + c];
}

void SymbolicMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  ring_.require_compatible(value.ring());
  data_[r * cols_ + c] = std::move(value);
}

SymbolicMatrix SymbolicMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
  SymbolicMatrix out(ring_, row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      out.set(r, c, at(row_idx[r], col_idx[c]));
  return out;
}

Polynomial determinant(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t k = m.rows();
  if (k > 16) throw std::invalid_argument("matrix too large for subset expansion");
  const Ring& ring = m.ring();
  if (k == 0) return Polynomial::constant(ring, 1);

  // partial[S] = signed sum over injections of the first popcount(S) rows
  // onto the column set S.  Processing row r extends every subset of size r.
  std::vector<Polynomial> partial(std::size_t(1) << k, Polynomial::zero(ring));
  partial[0] = Polynomial::constant(ring, 1);
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Polynomial> next(std::size_t(1) << k, Polynomial::zero(ring));
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << k); ++s) {
      if (std::popcount(s) != static_cast<int>(r) || partial[s].is_zero()) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (s & (std::uint32_t(1) << c)) continue;
        const Polynomial& entry = m.at(r, c);
        if (entry.is_zero()) continue;
        // Parity of columns already used that exceed c = inversions added.
        const int inversions = std::popcount(s >> (c + 1));
        Polynomial contrib = partial[s] * entry;
        if (inversions & 1) contrib = contrib.scaled(ring.ch().neg(1));
        next[s | (std::uint32_t(1) << c)] = next[s | (std::uint32_t(1) << c)] + contrib;
      }
    }
    partial = std::move(next);
  }
  return partial[(std::size_t(1) << k) - 1];
}

Polynomial lower_left_minor(const SymbolicMatrix& m, std::size_t i) {
  if (i == 0) return Polynomial::constant(m.ring(), 1);
  if (i > m.rows() || i > m.cols()) throw std::invalid_argument("minor size out of range");
  std::vector<std::size_t> rows(i), cols(i);
  std::iota(rows.begin(), rows.end(), m.rows() - i);
  std::iota(cols.begin(), cols.end(), std::size_t(0));
  return determinant(m.submatrix(rows, cols));
}

}  // namespace fsplit::algebra
