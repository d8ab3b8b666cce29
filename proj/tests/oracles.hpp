#pragma once

// Independent reference implementations ("oracles") used only by the test
// suites.  They are deliberately written with different algorithms than the
// library: recursive cofactor expansion instead of subset DP, literal
// residue enumeration instead of per-term criteria, literal polynomial
// division for the rnc recursion.

#include <cstdint>
#include <random>
#include <vector>

#include "fsplit/matrix.hpp"
#include "fsplit/polynomial.hpp"
#include "fsplit/splitting.hpp"
#include "fsplit/variables.hpp"

namespace oracles {

using namespace fsplit::algebra;

// Cofactor expansion along the first row.
inline Polynomial det_cofactor(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square");
  const std::size_t k = m.rows();
  if (k == 0) return Polynomial::constant(m.ring(), 1);
  if (k == 1) return m.at(0, 0);
  Polynomial acc = Polynomial::zero(m.ring());
  std::vector<std::size_t> rows(k - 1);
  for (std::size_t r = 1; r < k; ++r) rows[r - 1] = r;
  for (std::size_t c = 0; c < k; ++c) {
    if (m.at(0, c).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t cc = 0; cc < k; ++cc)
      if (cc != c) cols.push_back(cc);
    Polynomial minor = det_cofactor(m.submatrix(rows, cols));
    Polynomial contrib = m.at(0, c) * minor;
    if (c % 2 == 1) contrib = contrib.scaled(m.ring().ch().neg(1));
    acc = acc + contrib;
  }
  return acc;
}

// Ring F_p[v1..vk].
inline Ring generic_ring(std::uint32_t p, std::uint16_t k) {
  std::vector<VarId> vars;
  for (std::uint16_t i = 1; i <= k; ++i) vars.push_back(var_v(i));
  return Ring(Characteristic(p), make_table(std::move(vars)));
}

// Random polynomial with at most max_terms terms, exponents < max_exp.
inline Polynomial random_poly(std::mt19937_64& rng, const Ring& ring,
                              std::size_t max_terms, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coef(0, ring.p() - 1);
  std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
  std::vector<Polynomial::Term> terms;
  const std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(ring.nvars());
    for (std::size_t k = 0; k < ring.nvars(); ++k)
      m.set_exp(k, static_cast<Monomial::Exp>(expd(rng)));
    terms.push_back(Polynomial::Term{std::move(m), coef(rng)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// Random sparse matrix entry: zero, one, or a random small polynomial.
inline SymbolicMatrix random_matrix(std::mt19937_64& rng, const Ring& ring,
                                    std::size_t k) {
  SymbolicMatrix m(ring, k, k);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      switch (kind(rng)) {
        case 0:
          break;  // zero
        case 1:
          m.set(r, c, Polynomial::constant(ring, 1));
          break;
        default:
          m.set(r, c, random_poly(rng, ring, 2, 2));
      }
    }
  }
  return m;
}

// Enumerates every residue monomial v in [0, p-1]^N and calls fn(v).
template <typename Fn>
void for_each_residue(const Ring& ring, Fn&& fn) {
  const std::uint32_t p = ring.p();
  Monomial v(ring.nvars());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == ring.nvars()) {
      fn(v);
      return;
    }
    for (std::uint32_t e = 0; e < p; ++e) {
      v.set_exp(pos, static_cast<Monomial::Exp>(e));
      self(self, pos + 1);
    }
    v.set_exp(pos, 0);
  };
  rec(rec, 0);
}

// Literal compatibility check for a variable-generated ideal: enumerate all
// p^N residues v; whenever x^v lies in (S), demand sigma(x^v) in (S) termwise.
inline bool compat_vars_bruteforce(const fsplit::splitting::SplittingOperator& op,
                                   const std::vector<std::size_t>& s_idx) {
  bool ok = true;
  for_each_residue(op.ring(), [&](const Monomial& v) {
    if (!ok) return;
    bool in_ideal = false;
    for (std::size_t idx : s_idx)
      if (v.exp(idx) > 0) in_ideal = true;
    if (!in_ideal) return;
    Polynomial img = op.apply(Polynomial::monomial(op.ring(), v, 1));
    for (const Polynomial::Term& t : img.terms()) {
      bool divisible = false;
      for (std::size_t idx : s_idx)
        if (t.mon.exp(idx) > 0) divisible = true;
      if (!divisible) ok = false;
    }
  });
  return ok;
}

// Literal compatibility check for a general monomial ideal given by monomial
// generators: sigma(g * x^v) must land in the ideal for every generator g and
// every residue v (complete by p-linearity and additivity).
inline bool compat_monomial_ideal_bruteforce(const fsplit::splitting::SplittingOperator& op,
                                             const std::vector<Monomial>& gens) {
  auto in_ideal = [&](const Monomial& m) {
    for (const Monomial& g : gens)
      if (g.divides(m)) return true;
    return false;
  };
  bool ok = true;
  for (const Monomial& g : gens) {
    for_each_residue(op.ring(), [&](const Monomial& v) {
      if (!ok) return;
      Polynomial img = op.apply(Polynomial::monomial(op.ring(), g * v, 1));
      for (const Polynomial::Term& t : img.terms())
        if (!in_ideal(t.mon)) ok = false;
    });
    if (!ok) break;
  }
  return ok;
}

// Literal residual-normal-crossing recursion over a plain term map, sharing
// no division or substitution code with the library.
inline bool has_rnc_bruteforce(const Polynomial& f, const std::vector<std::size_t>& order) {
  std::vector<std::vector<Monomial::Exp>> terms;
  for (const Polynomial::Term& t : f.terms()) {
    std::vector<Monomial::Exp> e(f.ring().nvars());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.mon.exp(k);
    terms.push_back(std::move(e));
  }
  for (std::size_t slot : order) {
    if (terms.empty()) return false;
    for (const auto& e : terms)
      if (e[slot] == 0) return false;  // head variable does not divide
    std::vector<std::vector<Monomial::Exp>> next;
    for (auto& e : terms) {
      if (e[slot] == 1) {  // survives dividing once and then vanishing
        e[slot] = 0;
        next.push_back(std::move(e));
      }
    }
    terms = std::move(next);
  }
  return !terms.empty();
}

// Product of "staircase" factors: the order variables are split into
// consecutive blocks; each factor is its block's variable product minus a
// monomial containing a variable from an earlier block and of total degree at
// most the block size.  Such products have residual normal crossings along
// the block order by construction, and their total degree equals the number
// of order variables, which keeps the residue class of (p-1, ..., p-1) in
// f^{p-1} free of higher terms.
inline Polynomial random_staircase(std::mt19937_64& rng, const Ring& ring,
                                   const std::vector<VarId>& order) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::uint32_t> coef(1, ring.p() - 1);
  Polynomial f = Polynomial::constant(ring, 1);
  std::size_t block_start = 0;
  while (block_start < order.size()) {
    std::size_t block_end = block_start + 1;
    while (block_end < order.size() && coin(rng)) ++block_end;
    const std::size_t block_size = block_end - block_start;
    Monomial own(ring.nvars());
    for (std::size_t k = block_start; k < block_end; ++k)
      own.set_exp(*ring.table().index_of(order[k]), 1);
    Polynomial factor = Polynomial::monomial(ring, own, 1);
    if (block_start > 0 && coin(rng)) {
      std::uniform_int_distribution<std::size_t> earlier(0, block_start - 1);
      std::uniform_int_distribution<std::size_t> any(0, order.size() - 1);
      Monomial tail(ring.nvars());
      tail.set_exp(*ring.table().index_of(order[earlier(rng)]), 1);
      std::uniform_int_distribution<std::size_t> extra(0, block_size - 1);
      for (std::size_t budget = extra(rng); budget > 0; --budget) {
        std::size_t slot = *ring.table().index_of(order[any(rng)]);
        tail.set_exp(slot, static_cast<Monomial::Exp>(tail.exp(slot) + 1));
      }
      factor = factor - Polynomial::monomial(ring, tail, coef(rng));
    }
    f = f * factor;
    block_start = block_end;
  }
  return f;
}

}  // namespace oracles
