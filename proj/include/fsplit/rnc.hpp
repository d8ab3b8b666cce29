#pragma once

#include <optional>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit::rnc {

// An explicit variable order for the residual-normal-crossing recursion; the
// property depends on it.  Must list every variable occurring in the input
// (and may list more), without duplicates.
using OrderedVars = std::vector<algebra::VarId>;

// Recursive residual-normal-crossing test: the zero polynomial fails, a
// nonzero input with no variables left to process passes, and otherwise the
// head variable must divide the input exactly, after which the quotient with
// that variable set to zero is examined against the remaining order.
bool has_rnc(const algebra::Polynomial& f, const OrderedVars& order);

// The product of all order variables when f has residual normal crossings
// (in which case it is also checked to be the lex-minimal monomial of f under
// the order, most significant variable first); std::nullopt otherwise.
std::optional<algebra::Monomial> rnc_minimal_monomial(const algebra::Polynomial& f,
                                                      const OrderedVars& order);

}  // namespace fsplit::rnc
