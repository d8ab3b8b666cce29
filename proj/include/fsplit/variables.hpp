#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fsplit::algebra {

// Variable identifiers.  Matrix variables x[i][j], y[i][j] and diagonal-shift
// variables z[i][j] carry strictly lower-triangular index pairs (j < i);
// generic variables v[k] carry a single index; t is the Rees parameter.
enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2, Generic = 3, Rees = 4 };

struct VarId {
  VarKind kind = VarKind::Generic;
  std::uint16_t i = 0;  // row index, or k for Generic, unused for Rees
  std::uint16_t j = 0;  // column index

  auto operator<=>(const VarId&) const = default;
};

VarId var_x(std::uint16_t i, std::uint16_t j);
VarId var_y(std::uint16_t i, std::uint16_t j);
VarId var_z(std::uint16_t i, std::uint16_t j);
VarId var_v(std::uint16_t k);
inline VarId var_t() { return VarId{VarKind::Rees, 0, 0}; }

// Renders "x[3][1]", "v[2]", "t".
std::string to_string(const VarId& v);

// An immutable ordered list of distinct variables.  The position in the list
// is the variable's significance for the term order: index 0 is the most
// significant.  This same order is what residual-normal-crossing recursion
// and canonical printing consume.
class VariableTable {
 public:
  // Validates uniqueness and lower-triangularity of X/Y/Z indices.
  explicit VariableTable(std::vector<VarId> ordered);

  std::size_t size() const noexcept { return vars_.size(); }
  const VarId& at(std::size_t idx) const { return vars_.at(idx); }
  const std::vector<VarId>& vars() const noexcept { return vars_; }
  std::optional<std::size_t> index_of(const VarId& v) const;
  bool contains(const VarId& v) const { return index_of(v).has_value(); }

  bool operator==(const VariableTable& o) const { return vars_ == o.vars_; }

 private:
  std::vector<VarId> vars_;
  std::vector<std::pair<VarId, std::size_t>> index_;  // sorted by VarId
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<VarId> ordered);

}  // namespace fsplit::algebra
