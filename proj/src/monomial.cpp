#include "fsplit/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace fsplit::algebra {

bool Monomial::is_one() const noexcept {
  for (Exp e : e_)
    if (e != 0) return false;
  return true;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exp e : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial width mismatch");
  Monomial r(e_.size());
  for (std::size_t k = 0; k < e_.size(); ++k) {
    std::uint32_t s = std::uint32_t(e_[k]) + o.e_[k];
    if (s > std::numeric_limits<Exp>::max())
      throw std::overflow_error("monomial exponent overflow");
    r.e_[k] = static_cast<Exp>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (e_.size() != o.e_.size()) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  Monomial r(e_.size());
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = static_cast<Exp>(o.e_[k] - e_[k]);
  return r;
}

int Monomial::lex_cmp(const Monomial& o) const noexcept {
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] != o.e_[k]) return e_[k] < o.e_[k] ? -1 : 1;
  }
  return 0;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent slots.
  std::size_t h = 1469598103934665603ull;
  for (Exp e : e_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fsplit::algebra
