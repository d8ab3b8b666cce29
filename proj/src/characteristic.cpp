#include "fsplit/characteristic.hpp"

#include <stdexcept>

namespace fsplit::algebra {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Characteristic::Characteristic(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
}

std::uint32_t Characteristic::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t Characteristic::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace fsplit::algebra
