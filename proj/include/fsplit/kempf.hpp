#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit::kempf {

// A weakly decreasing vector (a_1, ..., a_n) with a_n = 0 and n - a_j >= j,
// indexing a Kempf variety of codimension sum(a).
using KempfVector = std::vector<std::uint16_t>;

bool is_kempf_vector(const KempfVector& a, std::uint16_t n);

// Sum of the entries (the codimension of the variety).
std::uint32_t codimension(const KempfVector& a);

// Height-t, width-s rectangle: a_i = t for i <= s, else 0.
struct RectangularKempf {
  std::uint16_t t = 0;
  std::uint16_t s = 0;
  bool operator==(const RectangularKempf&) const = default;
};

KempfVector rectangle_vector(const RectangularKempf& r, std::uint16_t n);

// All rectangles with t >= 1, s >= 1, s + t <= n; there are n(n-1)/2.
std::vector<RectangularKempf> rectangular_vectors(std::uint16_t n);

// One rectangle per distinct nonzero value t of a, of width #{j : a_j >= t},
// in decreasing height order; empty for the zero vector.  The union of the
// rectangles' chart variable sets is checked to equal kempf_vars(a).
std::vector<RectangularKempf> decompose_into_rectangulars(const KempfVector& a,
                                                          std::uint16_t n);

// Chart variables cut out by the vector: {x_ij : i > n - a_j, i > j}, plus
// the matching y-variables when doubled (the ideal of X x X).
std::vector<algebra::VarId> kempf_vars(const KempfVector& a, std::uint16_t n, bool doubled);

// Compatibility of the doubled Kempf ideal under the given operator, which
// must act on the rank-n chart ring.
bool check_kempf_compat(const splitting::SplittingOperator& op, std::uint16_t n,
                        const KempfVector& a);
// Convenience overload constructing the operator from f_section(n)^{p-1}.
bool check_kempf_compat(std::uint16_t n, std::uint32_t p, const KempfVector& a);

// Checks (m_vars, f*g) = (m_vars, f) cap (m_vars, g) for f, g supported away
// from m_vars: generator containments, a full monomial sweep up to total
// degree 2(deg f + deg g), and seeded random elements of the intersection are
// all cross-checked for membership in both sides.
bool monideal_intersection_identity(const std::vector<algebra::VarId>& m_vars,
                                    const algebra::Polynomial& f,
                                    const algebra::Polynomial& g,
                                    std::uint64_t seed = 1);

// All of A for rank n, in ascending lexicographic order.
std::vector<KempfVector> all_kempf_vectors(std::uint16_t n);

// "2,1,0,0"
std::string to_string(const KempfVector& a);

}  // namespace fsplit::kempf
