#include "fsplit/rnc.hpp"

#include <stdexcept>
#include <utility>

namespace fsplit::rnc {

using algebra::Monomial;
using algebra::Polynomial;
using algebra::Ring;
using algebra::VarId;

namespace {

// Resolves the order to table slots, rejecting duplicates and variables
// outside the ring, and requires every variable of f to be listed.
std::vector<std::size_t> resolve_order(const Polynomial& f, const OrderedVars& order) {
  const Ring& r = f.ring();
  std::vector<std::size_t> slots;
  slots.reserve(order.size());
  std::vector<char> listed(r.nvars(), 0);
  for (const VarId& v : order) {
    auto idx = r.table().index_of(v);
    if (!idx) throw std::invalid_argument("order variable not in ring: " + to_string(v));
    if (listed[*idx]) throw std::invalid_argument("duplicate order variable: " + to_string(v));
    listed[*idx] = 1;
    slots.push_back(*idx);
  }
  for (const Polynomial::Term& t : f.terms())
    for (std::size_t k = 0; k < r.nvars(); ++k)
      if (t.mon.exp(k) != 0 && !listed[k])
        throw std::invalid_argument("variable of f missing from order: " +
                                    to_string(r.table().at(k)));
  return slots;
}

bool has_rnc_from(Polynomial f, const OrderedVars& order, std::size_t pos) {
  if (f.is_zero()) return false;
  if (pos == order.size()) return true;  // a nonzero constant by now
  const Ring& r = f.ring();
  auto quotient = exact_divide(f, Polynomial::variable(r, order[pos]));
  if (!quotient) return false;
  Polynomial next = substitute(*quotient, {{order[pos], Polynomial::zero(r)}});
  return has_rnc_from(std::move(next), order, pos + 1);
}

}  // namespace

bool has_rnc(const Polynomial& f, const OrderedVars& order) {
  resolve_order(f, order);
  return has_rnc_from(f, order, 0);
}

std::optional<Monomial> rnc_minimal_monomial(const Polynomial& f, const OrderedVars& order) {
  std::vector<std::size_t> slots = resolve_order(f, order);
  if (!has_rnc_from(f, order, 0)) return std::nullopt;

  Monomial product(f.ring().nvars());
  for (std::size_t s : slots) product.set_exp(s, 1);

  // Lex comparison with significance given by the order itself, not by the
  // ring table; ties beyond the order cannot occur since f's support is
  // covered by it.
  auto order_less = [&](const Monomial& a, const Monomial& b) {
    for (std::size_t s : slots) {
      if (a.exp(s) != b.exp(s)) return a.exp(s) < b.exp(s);
    }
    return false;
  };
  const Monomial* minimal = &f.terms().front().mon;
  for (const Polynomial::Term& t : f.terms())
    if (order_less(t.mon, *minimal)) minimal = &t.mon;
  if (!(*minimal == product))
    throw std::logic_error("residual normal crossing without minimal variable product");
  return product;
}

}  // namespace fsplit::rnc
