#pragma once

#include <cstdint>
#include <vector>

#include "fsplit/matrix.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit::diag {

// Chart data attached to rank n: for each i in 1..2n-1 the diagonal variable
// list V_i of the submatrix L_i, its product monomial m_i, and the diagonal
// multiplicity mu_i.  The ring's variable table is the concatenation
// V_1, V_2, ..., V_{2n-1}, which is also the residual-normal-crossing order.
struct DiagonalData {
  std::uint16_t n;
  algebra::Ring ring;
  std::vector<std::vector<algebra::VarId>> V;
  std::vector<algebra::Monomial> m;
  std::vector<std::uint32_t> mu;
};

// The chart polynomial ring of rank n in characteristic p, variables ordered
// by the concatenation of the V_i.
algebra::Ring chart_ring(std::uint16_t n, std::uint32_t p);

// Lower n x 2n block: row r carries (x_rc, y_rc) in column pair (2c-1, 2c),
// specialized to unipotent lower-triangular inputs ((1,1) at r = c, (0,0)
// above).  The ring must contain the chart variables.
algebra::SymbolicMatrix build_L(std::uint16_t n, const algebra::Ring& ring);

// Full 2n x 2n matrix: the top n rows carry the x-columns interleaved with
// zero columns in reversed row order, the bottom n rows interleave the x- and
// y-columns; again specialized to unipotent lower-triangular inputs.
algebra::SymbolicMatrix build_M(std::uint16_t n, const algebra::Ring& ring);

// L_i: for i <= n the lower-left i x i submatrix of L; for i >= n the
// (2n-i) x (2n-i) matrix obtained from the first i columns of L by deleting
// the first 2(i-n) columns and the first i-n rows.  Both readings agree at
// i = n.  Requires 1 <= i <= 2n-1.
algebra::SymbolicMatrix submatrix_L_i(std::uint16_t n, std::uint16_t i,
                                      const algebra::Ring& ring);

// Assembles V_i / m_i / mu_i with the structural invariants checked:
// mu_i = min(floor(i/2), floor((2n-i)/2)), sum mu_i = n(n-1)/2, the V_i
// partition the chart variables, and each V_i matches the non-constant
// diagonal of the matrix-built L_i.
DiagonalData diagonal_data(std::uint16_t n, std::uint32_t p);

// The diagonal section: the product of det L_i over i = 1..2n-1, scaled so
// the product of all chart variables (= m_1 ... m_{2n-1}) has coefficient 1.
algebra::Polynomial f_section(std::uint16_t n, std::uint32_t p);

// Lower-left minor of M versus det L_i, with the matching sign recorded
// (+1 or -1; 0 when the polynomials differ beyond sign).
struct DeltaIdentity {
  bool equal = false;
  int sign = 0;
};
DeltaIdentity check_delta_identity(std::uint16_t n, std::uint16_t i, std::uint32_t p);

// det L_i with every term divisible by a variable of V_1 u ... u V_{i-1}
// struck out must leave exactly the monomial m_i with coefficient one.
bool check_congruence(std::uint16_t n, std::uint16_t i, std::uint32_t p);

// Product of the lower-left minors delta_1 ... delta_{n-1} of one generic
// unipotent lower-triangular matrix (the single-flag anticanonical section
// restricted to the chart, where the principal minors are 1).
algebra::Polynomial anticanonical_naive(std::uint16_t n, std::uint32_t p);

// Number of adjacent column pairs (2t-1, 2t) of the given L_i whose entries
// agree up to exchanging x- and y-variables; structurally equals mu_i and
// witnesses det L_i lying in the mu_i-th power of the diagonal ideal.
std::uint32_t identical_column_pairs(const algebra::SymbolicMatrix& li);

}  // namespace fsplit::diag
