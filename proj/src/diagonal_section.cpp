#include "fsplit/diagonal_section.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace fsplit::diag {

using algebra::Characteristic;
using algebra::Monomial;
using algebra::Polynomial;
using algebra::Ring;
using algebra::SymbolicMatrix;
using algebra::VarId;
using algebra::VarKind;

namespace {

void require_rank(std::uint16_t n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

void require_index(std::uint16_t n, std::uint16_t i) {
  if (i < 1 || i > 2 * n - 1) throw std::invalid_argument("submatrix index out of range");
}

// The entry of L at 1-based position (r, c): a chart variable, or the
// constant 0 or 1 on and above the block diagonal.
std::optional<VarId> l_entry_var(std::uint16_t r, std::uint16_t c) {
  const std::uint16_t cc = static_cast<std::uint16_t>((c + 1) / 2);
  if (r > cc) return (c % 2 == 1) ? algebra::var_x(r, cc) : algebra::var_y(r, cc);
  return std::nullopt;
}

bool l_entry_is_one(std::uint16_t r, std::uint16_t c) {
  return r == static_cast<std::uint16_t>((c + 1) / 2);
}

Polynomial l_entry(const Ring& ring, std::uint16_t r, std::uint16_t c) {
  if (auto v = l_entry_var(r, c)) return Polynomial::variable(ring, *v);
  return Polynomial::constant(ring, l_entry_is_one(r, c) ? 1 : 0);
}

// 1-based (row, column) ranges of L_i inside L.
struct Window {
  std::uint16_t row0, col0, size;  // first row, first column, dimension
};

Window l_i_window(std::uint16_t n, std::uint16_t i) {
  require_rank(n);
  require_index(n, i);
  if (i <= n) return {static_cast<std::uint16_t>(n - i + 1), 1, i};
  return {static_cast<std::uint16_t>(i - n + 1), static_cast<std::uint16_t>(2 * (i - n) + 1),
          static_cast<std::uint16_t>(2 * n - i)};
}

// Diagonal variables of L_i, derived combinatorially before any ring exists.
std::vector<VarId> diagonal_vars(std::uint16_t n, std::uint16_t i) {
  const Window w = l_i_window(n, i);
  std::vector<VarId> vars;
  for (std::uint16_t k = 0; k < w.size; ++k)
    if (auto v = l_entry_var(static_cast<std::uint16_t>(w.row0 + k),
                             static_cast<std::uint16_t>(w.col0 + k)))
      vars.push_back(*v);
  return vars;
}

std::uint32_t mu_formula(std::uint16_t n, std::uint16_t i) {
  return std::min<std::uint32_t>(i / 2, (2 * n - i) / 2);
}

// The single variable of a monic degree-one term, if the polynomial is one.
std::optional<VarId> as_single_variable(const Polynomial& f) {
  if (f.term_count() != 1 || f.terms()[0].coef != 1) return std::nullopt;
  const Monomial& m = f.terms()[0].mon;
  std::optional<VarId> found;
  for (std::size_t k = 0; k < f.ring().nvars(); ++k) {
    if (m.exp(k) == 0) continue;
    if (found || m.exp(k) != 1) return std::nullopt;
    found = f.ring().table().at(k);
  }
  return found;
}

}  // namespace

Ring chart_ring(std::uint16_t n, std::uint32_t p) {
  require_rank(n);
  std::vector<VarId> table;
  for (std::uint16_t i = 1; i <= 2 * n - 1; ++i)
    for (const VarId& v : diagonal_vars(n, i)) table.push_back(v);
  return Ring(Characteristic(p), algebra::make_table(std::move(table)));
}

SymbolicMatrix build_L(std::uint16_t n, const Ring& ring) {
  require_rank(n);
  SymbolicMatrix l(ring, n, 2 * std::size_t(n));
  for (std::uint16_t r = 1; r <= n; ++r)
    for (std::uint16_t c = 1; c <= 2 * n; ++c)
      l.set(r - 1, c - 1, l_entry(ring, r, c));
  return l;
}

SymbolicMatrix build_M(std::uint16_t n, const Ring& ring) {
  require_rank(n);
  SymbolicMatrix m(ring, 2 * std::size_t(n), 2 * std::size_t(n));
  auto x_entry = [&](std::uint16_t r, std::uint16_t c) {
    if (r > c) return Polynomial::variable(ring, algebra::var_x(r, c));
    return Polynomial::constant(ring, r == c ? 1 : 0);
  };
  auto y_entry = [&](std::uint16_t r, std::uint16_t c) {
    if (r > c) return Polynomial::variable(ring, algebra::var_y(r, c));
    return Polynomial::constant(ring, r == c ? 1 : 0);
  };
  for (std::uint16_t k = 1; k <= n; ++k) {
    const std::uint16_t row = static_cast<std::uint16_t>(n + 1 - k);  // x-row order reversed
    for (std::uint16_t c = 1; c <= n; ++c) {
      m.set(k - 1, 2 * c - 2, x_entry(row, c));
      m.set(k - 1, 2 * c - 1, Polynomial::constant(ring, 0));
    }
  }
  for (std::uint16_t j = 1; j <= n; ++j) {
    for (std::uint16_t c = 1; c <= n; ++c) {
      m.set(n + j - 1, 2 * c - 2, x_entry(j, c));
      m.set(n + j - 1, 2 * c - 1, y_entry(j, c));
    }
  }
  return m;
}

SymbolicMatrix submatrix_L_i(std::uint16_t n, std::uint16_t i, const Ring& ring) {
  const Window w = l_i_window(n, i);
  SymbolicMatrix li(ring, w.size, w.size);
  for (std::uint16_t r = 0; r < w.size; ++r)
    for (std::uint16_t c = 0; c < w.size; ++c)
      li.set(r, c, l_entry(ring, static_cast<std::uint16_t>(w.row0 + r),
                           static_cast<std::uint16_t>(w.col0 + c)));
  return li;
}

DiagonalData diagonal_data(std::uint16_t n, std::uint32_t p) {
  Ring ring = chart_ring(n, p);  // throws on duplicates across the V_i
  std::vector<std::vector<VarId>> v;
  std::vector<Monomial> m;
  std::vector<std::uint32_t> mu;
  std::size_t total_vars = 0;
  std::uint32_t total_mu = 0;
  for (std::uint16_t i = 1; i <= 2 * n - 1; ++i) {
    std::vector<VarId> vi = diagonal_vars(n, i);
    // Cross-check against the diagonal of the matrix-built L_i.
    SymbolicMatrix li = submatrix_L_i(n, i, ring);
    std::vector<VarId> from_matrix;
    for (std::size_t k = 0; k < li.rows(); ++k) {
      const Polynomial& e = li.at(k, k);
      if (e.is_constant()) continue;
      auto single = as_single_variable(e);
      if (!single) throw std::logic_error("non-variable diagonal entry");
      from_matrix.push_back(*single);
    }
    if (vi != from_matrix) throw std::logic_error("diagonal variable mismatch");

    Monomial mi(ring.nvars());
    for (const VarId& var : vi) mi.set_exp(*ring.table().index_of(var), 1);
    total_vars += vi.size();
    total_mu += mu_formula(n, i);
    v.push_back(std::move(vi));
    m.push_back(std::move(mi));
    mu.push_back(mu_formula(n, i));
  }
  if (total_vars != std::size_t(n) * (n - 1))
    throw std::logic_error("diagonal variables do not cover the chart");
  if (total_mu != std::uint32_t(n) * (n - 1) / 2)
    throw std::logic_error("diagonal multiplicities do not sum to n(n-1)/2");
  return DiagonalData{n, std::move(ring), std::move(v), std::move(m), std::move(mu)};
}

Polynomial f_section(std::uint16_t n, std::uint32_t p) {
  Ring ring = chart_ring(n, p);
  Polynomial f = Polynomial::constant(ring, 1);
  for (std::uint16_t i = 1; i <= 2 * n - 1; ++i)
    f = f * determinant(submatrix_L_i(n, i, ring));
  Monomial all_vars(ring.nvars());
  for (std::size_t k = 0; k < ring.nvars(); ++k) all_vars.set_exp(k, 1);
  const std::uint32_t c = f.coefficient_of(all_vars);
  if (c == 0) throw std::logic_error("variable product missing from the section");
  return f.scaled(ring.ch().inv(c));
}

DeltaIdentity check_delta_identity(std::uint16_t n, std::uint16_t i, std::uint32_t p) {
  require_rank(n);
  require_index(n, i);
  Ring ring = chart_ring(n, p);
  Polynomial minor = lower_left_minor(build_M(n, ring), i);
  Polynomial det_li = determinant(submatrix_L_i(n, i, ring));
  if (minor == det_li) return {true, 1};
  if (minor == det_li.scaled(p - 1)) return {true, -1};
  return {false, 0};
}

bool check_congruence(std::uint16_t n, std::uint16_t i, std::uint32_t p) {
  require_rank(n);
  require_index(n, i);
  Ring ring = chart_ring(n, p);
  // The table concatenates the V_j, so V_1 u ... u V_{i-1} occupies a prefix.
  std::size_t struck_prefix = 0;
  for (std::uint16_t j = 1; j < i; ++j) struck_prefix += diagonal_vars(n, j).size();

  Polynomial det_li = determinant(submatrix_L_i(n, i, ring));
  std::vector<Polynomial::Term> kept;
  for (const Polynomial::Term& t : det_li.terms()) {
    bool struck = false;
    for (std::size_t k = 0; k < struck_prefix && !struck; ++k) struck = t.mon.exp(k) != 0;
    if (!struck) kept.push_back(t);
  }
  Polynomial remainder = Polynomial::from_terms(ring, std::move(kept));

  Monomial mi(ring.nvars());
  for (const VarId& var : diagonal_vars(n, i)) mi.set_exp(*ring.table().index_of(var), 1);
  return remainder == Polynomial::monomial(ring, mi, 1);
}

Polynomial anticanonical_naive(std::uint16_t n, std::uint32_t p) {
  require_rank(n);
  Ring ring = chart_ring(n, p);
  SymbolicMatrix u(ring, n, n);
  for (std::uint16_t r = 1; r <= n; ++r)
    for (std::uint16_t c = 1; c <= n; ++c) {
      if (r > c)
        u.set(r - 1, c - 1, Polynomial::variable(ring, algebra::var_x(r, c)));
      else
        u.set(r - 1, c - 1, Polynomial::constant(ring, r == c ? 1 : 0));
    }
  Polynomial f = Polynomial::constant(ring, 1);
  for (std::uint16_t i = 1; i < n; ++i) f = f * lower_left_minor(u, i);
  return f;
}

std::uint32_t identical_column_pairs(const SymbolicMatrix& li) {
  std::uint32_t pairs = 0;
  for (std::size_t c = 0; c + 1 < li.cols(); c += 2) {
    bool match = true;
    for (std::size_t r = 0; r < li.rows() && match; ++r) {
      const Polynomial& a = li.at(r, c);
      const Polynomial& b = li.at(r, c + 1);
      if (a.is_constant() || b.is_constant()) {
        match = a == b;
        continue;
      }
      auto va = as_single_variable(a);
      auto vb = as_single_variable(b);
      match = va && vb && va->kind == VarKind::X && vb->kind == VarKind::Y &&
              va->i == vb->i && va->j == vb->j;
    }
    pairs += match;
  }
  return pairs;
}

}  // namespace fsplit::diag
