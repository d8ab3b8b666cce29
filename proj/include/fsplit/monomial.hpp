#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fsplit::algebra {

// Exponent vector of fixed width (one slot per table variable).  Index 0 is
// the most significant position of the lexicographic term order.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t width) : e_(width, 0) {}

  std::size_t width() const noexcept { return e_.size(); }
  Exp exp(std::size_t idx) const { return e_[idx]; }
  void set_exp(std::size_t idx, Exp v) { e_[idx] = v; }
  const std::vector<Exp>& exps() const noexcept { return e_; }

  bool is_one() const noexcept;
  std::uint64_t degree() const noexcept;

  // Componentwise sum; throws std::overflow_error if a slot would overflow.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  // Componentwise difference; caller must ensure divides(o).
  Monomial divide_into(const Monomial& o) const;

  bool operator==(const Monomial& o) const noexcept { return e_ == o.e_; }

  // Negative if *this precedes o in the lexicographic order (most significant
  // slot first), positive if it follows, 0 on equality.
  int lex_cmp(const Monomial& o) const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<Exp> e_;
};

// Comparator placing lexicographically largest monomials first (the canonical
// term order used for printing and leading terms).
struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return a.lex_cmp(b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace fsplit::algebra
