#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/characteristic.hpp"
#include "fsplit/monomial.hpp"
#include "fsplit/variables.hpp"

namespace fsplit::algebra {

// Sentinel for "minimum degree of the zero polynomial".
inline constexpr std::uint64_t kInfiniteDegree = std::numeric_limits<std::uint64_t>::max();

// A polynomial ring F_p[table].  Cheap to copy; two rings are compatible when
// the characteristics agree and the tables are identical (same object or same
// content in the same order).
class Ring {
 public:
  Ring(Characteristic p, TablePtr table);

  const Characteristic& ch() const noexcept { return p_; }
  std::uint32_t p() const noexcept { return p_.value(); }
  const VariableTable& table() const noexcept { return *table_; }
  const TablePtr& table_ptr() const noexcept { return table_; }
  std::size_t nvars() const noexcept { return table_->size(); }

  bool compatible_with(const Ring& o) const;
  // Throws std::invalid_argument("incompatible context") when incompatible.
  void require_compatible(const Ring& o) const;

 private:
  Characteristic p_;
  TablePtr table_;
};

// Sparse multivariate polynomial over F_p in canonical form: terms sorted in
// descending lexicographic order, coefficients in [1, p-1], no duplicates.
class Polynomial {
 public:
  struct Term {
    Monomial mon;
    std::uint32_t coef = 0;
  };

  static Polynomial zero(const Ring& ring);
  static Polynomial constant(const Ring& ring, std::uint64_t c);
  static Polynomial variable(const Ring& ring, const VarId& v);
  static Polynomial monomial(const Ring& ring, Monomial m, std::uint64_t c);
  // Normalizes (reduces coefficients, merges duplicates, sorts, drops zeros).
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_constant() const noexcept;
  // Coefficient of the constant term (0 when absent); requires is_constant
  // to be meaningful as "the value".
  std::uint32_t constant_value() const;

  std::uint64_t degree() const noexcept;  // max total degree, 0 for the zero polynomial
  bool is_homogeneous(std::uint64_t* deg_out = nullptr) const noexcept;

  const Term& leading_term() const;              // descending-lex first
  const Monomial& lex_min_monomial() const;      // descending-lex last
  std::uint32_t coefficient_of(const Monomial& m) const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint64_t c) const;  // multiply by a scalar

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  Polynomial(Ring ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  Ring ring_;
  std::vector<Term> terms_;

  friend class PolyBuilder;
};

// Accumulator for building polynomials out of many (monomial, coefficient)
// contributions; coefficients are reduced and zero terms dropped when the
// canonical polynomial is extracted.
class PolyBuilder {
 public:
  explicit PolyBuilder(const Ring& ring);
  void add(Monomial m, std::uint64_t c);
  void add(const Polynomial& f, std::uint64_t scale = 1);
  // Adds every term of f multiplied by the monomial shift and the scalar.
  void add_shifted(const Polynomial& f, const Monomial& shift, std::uint64_t scale = 1);
  void merge(PolyBuilder&& other);
  Polynomial finish();

 private:
  Ring ring_;
  // Canonical accumulated part: sorted descending-lex, merged, nonzero.
  std::vector<std::pair<Monomial, std::uint32_t>> sorted_;
  // Raw contributions not yet merged into sorted_.
  std::vector<std::pair<Monomial, std::uint32_t>> buf_;
  void flush();
};

// Serial reference product, kept independent of the OpenMP path for cross-checking.
Polynomial mul_serial(const Polynomial& a, const Polynomial& b);

// a^e by binary exponentiation (e = 0 gives 1).
Polynomial poly_pow(const Polynomial& a, std::uint64_t e);

// Substitution homomorphism.  Image polynomials must share one target ring;
// variables of f without an image are carried through by identity and must
// exist in the target table.  An empty map targets f's own ring.
Polynomial substitute(const Polynomial& f,
                      const std::vector<std::pair<VarId, Polynomial>>& images);

// Exact division: returns q with f = q*g, or nullopt when g does not divide f.
// Throws std::domain_error when g is zero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// Minimum, over the terms of f, of the total exponent carried by the listed
// variables; kInfiniteDegree for the zero polynomial.
std::uint64_t min_degree_in(const Polynomial& f, const std::vector<VarId>& vars);

// Reinterprets f in another ring with the same characteristic, matching
// variables by identity.  Throws when a variable occurring in f is absent
// from the target table.
Polynomial into_ring(const Polynomial& f, const Ring& target);

}  // namespace fsplit::algebra
