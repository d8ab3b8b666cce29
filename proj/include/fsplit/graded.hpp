#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsplit/polynomial.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit::graded {

using BigInt = boost::multiprecision::cpp_int;

// C(m, k), with C(m, k) = 0 whenever m < k or k < 0.
BigInt binomial(std::int64_t m, std::int64_t k);

// Ranks ell_0, ..., ell_n of the twists in the decomposition of the
// degree-zero part of the Frobenius pushforward on projective n-space:
// ell_j = C(jp+n, n) - sum_{i=1}^{j} C(i+n, n) * ell_{j-i}, sum ell_j = p^n.
struct EllRanks {
  std::uint16_t n = 0;
  std::uint32_t p = 0;
  std::vector<BigInt> ranks;

  // {"n":..., "p":..., "ranks":[...]} with exact integer literals.
  std::string to_json() const;
};

// Evaluates the recursion exactly; throws std::domain_error if any ell_j
// comes out negative and std::logic_error if the ranks do not sum to p^n.
EllRanks ell_ranks(std::uint16_t n, std::uint32_t p);

// For every d <= d_max checks
//   sum_j ell_j * C(d-j+n, n) == C(dp+n, n),
// the Hilbert-function identity forced by the pushforward decomposition.
// Requires d_max >= n (smaller ranges are already implied by the recursion).
bool check_graded_dimension_identity(std::uint16_t n, std::uint32_t p, std::uint32_t d_max);

// Degree-zero graded piece of the operator: for homogeneous m of degree d
// returns apply(op, m) when p | d (homogeneous of degree d/p) and 0 when
// p does not divide d.  Requires the section to be homogeneous of degree
// (p-1) * nvars so that the operator is graded; throws std::invalid_argument
// otherwise or for inhomogeneous input.
algebra::Polynomial sigma_degree_zero(const splitting::SplittingOperator& op,
                                      const algebra::Polynomial& m);

// The base ring with the Rees variable t appended as the last table entry.
algebra::Ring rees_extension(const algebra::Ring& base);

// The t-extension sigma[t] of the operator: writing g = sum_i a_i t^i with
// coefficients in the base ring, returns sum_i apply(op, a_{p*i}) t^i.
// g must live in rees_extension(op.ring()).
algebra::Polynomial sigma_t_apply(const splitting::SplittingOperator& op,
                                  const algebra::Polynomial& g);

// Bounded verification that the operator restricts to the Rees algebra of
// the diagonal ideal I compatibly with the exceptional ideal: for every
// m <= m_max, sigma(I^{pm}) lies in I^m and sigma(I^{pm+1}) in I^{m+1},
// checked on all shifted monomials whose z-degree is exactly pm or pm+1 and
// whose total degree is at most deg_bound (0 picks an automatic bound within
// the candidate budget).  A section that is not maximally split along the
// diagonal at order d(p-1) fails the check outright (witness recorded).
splitting::CompatResult rees_compatibility_check_detail(
    const splitting::SplittingOperator& op, const splitting::Pairing& pairing,
    std::uint32_t d, std::uint32_t m_max, std::uint64_t deg_bound = 0);
bool rees_compatibility_check(const splitting::SplittingOperator& op,
                              const splitting::Pairing& pairing, std::uint32_t d,
                              std::uint32_t m_max, std::uint64_t deg_bound = 0);

}  // namespace fsplit::graded
