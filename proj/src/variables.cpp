#include "fsplit/variables.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsplit::algebra {

namespace {

VarId make_matrix_var(VarKind kind, std::uint16_t i, std::uint16_t j) {
  if (j >= i) throw std::invalid_argument("matrix variable index must satisfy j < i");
  return VarId{kind, i, j};
}

}  // namespace

VarId var_x(std::uint16_t i, std::uint16_t j) { return make_matrix_var(VarKind::X, i, j); }
VarId var_y(std::uint16_t i, std::uint16_t j) { return make_matrix_var(VarKind::Y, i, j); }
VarId var_z(std::uint16_t i, std::uint16_t j) { return make_matrix_var(VarKind::Z, i, j); }

VarId var_v(std::uint16_t k) { return VarId{VarKind::Generic, k, 0}; }

std::string to_string(const VarId& v) {
  switch (v.kind) {
    case VarKind::X:
      return "x[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "]";
    case VarKind::Y:
      return "y[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "]";
    case VarKind::Z:
      return "z[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "]";
    case VarKind::Generic:
      return "v[" + std::to_string(v.i) + "]";
    case VarKind::Rees:
      return "t";
  }
  return "?";
}

VariableTable::VariableTable(std::vector<VarId> ordered) : vars_(std::move(ordered)) {
  index_.reserve(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const VarId& v = vars_[k];
    switch (v.kind) {
      case VarKind::X:
      case VarKind::Y:
      case VarKind::Z:
        if (v.j >= v.i)
          throw std::invalid_argument("matrix variable index must satisfy j < i");
        break;
      case VarKind::Generic:
      case VarKind::Rees:
        break;
    }
    index_.emplace_back(v, k);
  }
  std::sort(index_.begin(), index_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < index_.size(); ++k)
    if (index_[k].first == index_[k - 1].first)
      throw std::invalid_argument("duplicate variable in table");
}

std::optional<std::size_t> VariableTable::index_of(const VarId& v) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), v,
                             [](const auto& a, const VarId& b) { return a.first < b; });
  if (it == index_.end() || !(it->first == v)) return std::nullopt;
  return it->second;
}

TablePtr make_table(std::vector<VarId> ordered) {
  return std::make_shared<const VariableTable>(std::move(ordered));
}

}  // namespace fsplit::algebra
