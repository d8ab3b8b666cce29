#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit::splitting {

// One diagonal coordinate triple: a chart pair (x, y) together with the shift
// variable z that stands for y - x after the substitution y = x + z.
struct DiagonalPair {
  algebra::VarId x, y, z;
};
using Pairing = std::vector<DiagonalPair>;

// All strictly lower-triangular pairs (i, j), 1 <= j < i <= n, ordered by
// (i, j) ascending — the full pairing of the rank-n chart.
Pairing chart_pairing(std::uint16_t n);

// The base table with the pairing's z-variables appended in pairing order.
// Every x/y of the pairing must be present in base and every z absent.
algebra::Ring shifted_ring(const algebra::Ring& base, const Pairing& pairing);

// The ring homomorphisms y -> x + z and z -> y - x.
algebra::Polynomial shift_to_diagonal(const algebra::Polynomial& f, const Pairing& pairing,
                                      const algebra::Ring& shifted);
algebra::Polynomial unshift_from_diagonal(const algebra::Polynomial& g, const Pairing& pairing,
                                          const algebra::Ring& base);

// Minimal total z-degree of the shifted polynomial: the vanishing order of f
// along the diagonal y = x (kInfiniteDegree for f = 0).
std::uint64_t vanishing_order_on_diagonal(const algebra::Polynomial& f, const Pairing& pairing);

// The duality operator attached to a section s.  On an input monomial x^beta
// it keeps the section terms x^gamma with gamma + beta congruent to
// (p-1, ..., p-1) componentwise mod p and emits x^{(gamma+beta-(p-1))/p};
// coefficients pass through unchanged (the p-th root is the identity on F_p).
// Section terms are pre-indexed by their componentwise residue mod p, so one
// application costs O(|g| * matching section terms).
class SplittingOperator {
 public:
  // Throws std::invalid_argument for a zero section.
  explicit SplittingOperator(algebra::Polynomial section);

  const algebra::Polynomial& section() const noexcept { return section_; }
  const algebra::Ring& ring() const noexcept { return section_.ring(); }
  std::uint32_t p() const noexcept { return ring().p(); }

  algebra::Polynomial apply(const algebra::Polynomial& g) const;

  // The chart-level splitting condition apply(1) == 1.
  bool is_splitting() const;

  // When apply(1) is a nonzero constant c, returns the operator with the
  // section rescaled by c^{-1} (and stores c in *rescale when given, 1 when
  // no rescaling happened); otherwise returns an unchanged copy.
  SplittingOperator normalized(std::uint32_t* rescale = nullptr) const;

 private:
  algebra::Polynomial section_;
  std::unordered_map<algebra::Monomial, std::vector<std::uint32_t>, algebra::MonomialHash>
      residue_buckets_;
};

// (product of all table variables)^(p-1): the standard monomial splitting
// section of affine space.
algebra::Polynomial standard_section(const algebra::Ring& ring);

// A decidable ideal description.  Normal form: a set S of variables (possibly
// empty; the empty set denotes the zero ideal) plus at most one extra summand,
// either a principal generator h or a power m of the diagonal ideal of a
// pairing.  sum() merges Variables summands and rejects anything outside this
// normal form with "undecidable spec"; a DiagonalPower summand combined with
// variables additionally requires S to be closed under the pairing (x in S
// iff its partner y is), which keeps the shifted ideal monomial and membership
// exact.
class IdealSpec {
 public:
  enum class Kind { Variables, Principal, DiagonalPower, Sum };

  static IdealSpec variables(const algebra::Ring& ring, std::vector<algebra::VarId> vars);
  static IdealSpec principal(algebra::Polynomial h);  // h != 0
  static IdealSpec diagonal_power(const algebra::Ring& ring, Pairing pairing, std::uint32_t m);
  static IdealSpec sum(std::vector<IdealSpec> parts);

  Kind kind() const noexcept { return kind_; }
  const algebra::Ring& ring() const noexcept { return ring_; }
  const std::vector<algebra::VarId>& vars() const noexcept { return vars_; }
  const std::optional<algebra::Polynomial>& generator() const noexcept { return gen_; }
  const Pairing& pairing() const noexcept { return pairing_; }
  std::uint32_t power() const noexcept { return power_; }

  // Membership.  Exact for Variables, Principal, DiagonalPower, and
  // Variables+DiagonalPower sums; for Variables+Principal sums membership is
  // decided by the iterated reduction "drop terms lying in (S), then divide
  // the remainder by h", which is the defining operational semantics.
  bool contains(const algebra::Polynomial& f) const;

 private:
  IdealSpec(algebra::Ring ring) : ring_(std::move(ring)) {}

  algebra::Ring ring_;
  Kind kind_ = Kind::Variables;
  std::vector<algebra::VarId> vars_;          // sorted by table index
  std::vector<std::size_t> var_idx_;          // table indices of vars_
  std::optional<algebra::Polynomial> gen_;
  Pairing pairing_;                            // nonempty iff diagonal part present
  std::uint32_t power_ = 0;                    // m >= 1 iff diagonal part present

  // Lazily built shift data for the diagonal part.
  std::optional<algebra::Ring> ext_;
  std::vector<std::pair<algebra::VarId, algebra::Polynomial>> shift_images_;
  std::vector<std::size_t> shifted_member_idx_;  // ext indices generating the
                                                 // shifted monomial ideal of S
  std::vector<std::size_t> z_idx_;               // ext indices of the z-variables

  algebra::Polynomial drop_variable_terms(const algebra::Polynomial& f) const;
  friend struct IdealSpecAccess;
};

struct CompatResult {
  bool passed = false;
  bool exact = true;    // false: verified only up to a degree bound
  std::string witness;  // failure witness, or a note recording the bound
};

// Decides sigma(I) subseteq I.  Exact for Variables (per-term residue
// criterion), Principal (residue-class bucketing of h*s), and
// Variables+Principal sums; bounded-degree enumeration for ideals with a
// DiagonalPower part.  Requires is_splitting(op) and throws otherwise.
CompatResult compatibly_splits_detail(const SplittingOperator& op, const IdealSpec& ideal);
bool compatibly_splits(const SplittingOperator& op, const IdealSpec& ideal);

// The order criterion: the section vanishes along the diagonal with order
// exactly d(p-1).  Orders above d(p-1) are impossible for a splitting and
// throw std::domain_error; smaller orders return false.
bool is_maximally_split_diagonal(const SplittingOperator& op, const Pairing& pairing,
                                 std::uint32_t d);

// Bounded direct verification of sigma(I_diag^{mp+1}) subseteq I_diag^{m+1}
// for every m <= m_max, on all shifted monomials of total degree <= deg_bound
// (deg_bound = 0 selects an automatic bound, clamped so the candidate count
// stays tractable; the bound used is recorded in the witness).
CompatResult maximality_operator_check_detail(const SplittingOperator& op, const Pairing& pairing,
                                              std::uint32_t m_max, std::uint64_t deg_bound = 0);
bool maximality_operator_check(const SplittingOperator& op, const Pairing& pairing,
                               std::uint32_t m_max, std::uint64_t deg_bound = 0);

// Shared enumeration engine for the bounded checks (also used by the
// Rees-algebra module).  Works in shifted coordinates: the free slots are all
// base variables except the paired y's, plus one z-slot per pair; every
// polynomial of the base ring is a combination of such monomials.
class ShiftedEnumerator {
 public:
  ShiftedEnumerator(const algebra::Ring& base, const Pairing& pairing);

  const algebra::Ring& base() const noexcept { return base_; }
  const algebra::Ring& ext() const noexcept { return ext_; }
  const std::vector<algebra::VarId>& z_vars() const noexcept { return z_list_; }

  std::uint64_t z_degree(const algebra::Monomial& cand) const;
  // Expands the candidate back into base coordinates via z -> y - x, using
  // cached difference powers (call warm(bound) before parallel use).
  algebra::Polynomial unshift_monomial(const algebra::Monomial& cand) const;
  // Vanishing order of a base-ring polynomial along the diagonal.
  std::uint64_t shifted_z_order(const algebra::Polynomial& g) const;
  void warm(std::uint64_t bound);

  // All monomials over (free slots, z slots) with z-degree in [min_z, bound]
  // and total degree <= bound.
  std::vector<algebra::Monomial> candidates(std::uint64_t min_z, std::uint64_t bound) const;
  // Approximate candidate count for clamping.
  double estimate(std::uint64_t min_z, std::uint64_t bound) const;
  // Largest bound <= formula_bound with estimate(1, bound) <= budget, but
  // never below floor_bound.
  std::uint64_t clamped_bound(std::uint64_t formula_bound, std::uint64_t floor_bound,
                              double budget) const;

 private:
  algebra::Ring base_;
  Pairing pairing_;
  algebra::Ring ext_;
  std::vector<std::size_t> z_slots_;     // ext indices of z-variables
  std::vector<std::size_t> free_slots_;  // ext indices of non-y, non-z variables
  std::vector<algebra::VarId> z_list_;
  std::vector<std::pair<algebra::VarId, algebra::Polynomial>> shift_images_;
  std::vector<std::size_t> free_base_idx_;            // base index per free slot
  std::vector<std::vector<algebra::Polynomial>> diff_powers_;  // per pair: (y-x)^e
};

}  // namespace fsplit::splitting
