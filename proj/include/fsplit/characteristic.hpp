#pragma once

#include <cstdint>

namespace fsplit::algebra {

// Prime characteristic of the coefficient field F_p.  All coefficient
// arithmetic in the library is delegated to this class so that reductions
// happen in exactly one place.
class Characteristic {
 public:
  // Throws std::invalid_argument unless p is prime (p >= 2).
  explicit Characteristic(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t a) const noexcept {
    return static_cast<std::uint32_t>(a % p_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  // a^e mod p by binary exponentiation.
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Multiplicative inverse via Fermat; throws std::domain_error on 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const Characteristic& o) const noexcept { return p_ == o.p_; }
  bool operator!=(const Characteristic& o) const noexcept { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace fsplit::algebra
