#pragma once

#include <string>
#include <string_view>

#include "fsplit/polynomial.hpp"

namespace fsplit::algebra {

// Canonical text form: terms in descending lexicographic order joined by
// " + ", each term an optional coefficient in [2, p-1] (1 is omitted unless
// the monomial is trivial) followed by "*"-separated variables in table
// order, exponents rendered as "^e" for e > 1.  Examples:
//   "4*x[3][1]*y[2][1] + x[2][1]*y[3][1]",  "v[1]^2 + 2",  "0".
std::string to_string(const Polynomial& f);

// Parses the grammar above (whitespace around tokens is tolerated; repeated
// variables within a term multiply).  Every variable must belong to the
// ring's table.  Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

// Parses a single variable token: "x[3][1]", "v[2]", "t".
VarId parse_var(std::string_view token);

// Convenience for ad-hoc input (the eval tool): scans the text for variable
// tokens and builds a deterministic table ordered by kind (x, y, z, v, t),
// then by indices ascending.
Ring inferred_ring(std::string_view text, const Characteristic& p);
Ring inferred_ring(const std::vector<std::string_view>& texts, const Characteristic& p);

}  // namespace fsplit::algebra
