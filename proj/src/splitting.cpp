#include "fsplit/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsplit/text_io.hpp"

namespace fsplit::splitting {

using algebra::Characteristic;
using algebra::kInfiniteDegree;
using algebra::make_table;
using algebra::min_degree_in;
using algebra::Monomial;
using algebra::Polynomial;
using algebra::PolyBuilder;
using algebra::Ring;
using algebra::substitute;
using algebra::VarId;

namespace {

// Cap on the number of enumerated shifted monomials when a bounded check
// chooses its own degree bound.
constexpr double kCandidateBudget = 2.0e5;

std::string monomial_text(const Ring& ring, const Monomial& m) {
  return algebra::to_string(Polynomial::monomial(ring, m, 1));
}

}  // namespace

Pairing chart_pairing(std::uint16_t n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  Pairing out;
  out.reserve(std::size_t(n) * (n - 1) / 2);
  for (std::uint16_t i = 2; i <= n; ++i)
    for (std::uint16_t j = 1; j < i; ++j)
      out.push_back(DiagonalPair{algebra::var_x(i, j), algebra::var_y(i, j),
                                 algebra::var_z(i, j)});
  return out;
}

Ring shifted_ring(const Ring& base, const Pairing& pairing) {
  std::vector<VarId> vars = base.table().vars();
  for (const DiagonalPair& pr : pairing) {
    if (!base.table().contains(pr.x) || !base.table().contains(pr.y))
      throw std::invalid_argument("pairing variable not in table: " +
                                  algebra::to_string(pr.x) + "/" + algebra::to_string(pr.y));
    if (base.table().contains(pr.z))
      throw std::invalid_argument("shift variable already present: " +
                                  algebra::to_string(pr.z));
    vars.push_back(pr.z);
  }
  return Ring(base.ch(), make_table(std::move(vars)));
}

Polynomial shift_to_diagonal(const Polynomial& f, const Pairing& pairing, const Ring& shifted) {
  std::vector<std::pair<VarId, Polynomial>> images;
  images.reserve(pairing.size());
  for (const DiagonalPair& pr : pairing)
    images.emplace_back(pr.y, Polynomial::variable(shifted, pr.x) +
                                  Polynomial::variable(shifted, pr.z));
  return substitute(f, images);
}

Polynomial unshift_from_diagonal(const Polynomial& g, const Pairing& pairing, const Ring& base) {
  std::vector<std::pair<VarId, Polynomial>> images;
  images.reserve(pairing.size());
  for (const DiagonalPair& pr : pairing)
    images.emplace_back(pr.z, Polynomial::variable(base, pr.y) -
                                  Polynomial::variable(base, pr.x));
  return substitute(g, images);
}

std::uint64_t vanishing_order_on_diagonal(const Polynomial& f, const Pairing& pairing) {
  if (pairing.empty()) return f.is_zero() ? kInfiniteDegree : 0;
  Ring ext = shifted_ring(f.ring(), pairing);
  Polynomial shifted = shift_to_diagonal(f, pairing, ext);
  std::vector<VarId> zs;
  zs.reserve(pairing.size());
  for (const DiagonalPair& pr : pairing) zs.push_back(pr.z);
  return min_degree_in(shifted, zs);
}

// ---------------------------------------------------------------------------
// SplittingOperator

SplittingOperator::SplittingOperator(Polynomial section) : section_(std::move(section)) {
  if (section_.is_zero()) throw std::invalid_argument("section must be nonzero");
  const std::uint32_t p = section_.ring().p();
  const std::size_t w = section_.ring().nvars();
  residue_buckets_.reserve(section_.term_count());
  for (std::size_t idx = 0; idx < section_.term_count(); ++idx) {
    const Monomial& m = section_.terms()[idx].mon;
    Monomial r(w);
    for (std::size_t k = 0; k < w; ++k)
      r.set_exp(k, static_cast<Monomial::Exp>(m.exp(k) % p));
    residue_buckets_[r].push_back(static_cast<std::uint32_t>(idx));
  }
}

Polynomial SplittingOperator::apply(const Polynomial& g) const {
  ring().require_compatible(g.ring());
  const Characteristic& ch = ring().ch();
  const std::uint32_t p = ch.value();
  const std::size_t w = ring().nvars();
  PolyBuilder out(ring());
  Monomial key(w);
  for (const Polynomial::Term& tg : g.terms()) {
    for (std::size_t k = 0; k < w; ++k) {
      const std::uint32_t b = tg.mon.exp(k) % p;
      key.set_exp(k, static_cast<Monomial::Exp>(p - 1 - b));
    }
    auto it = residue_buckets_.find(key);
    if (it == residue_buckets_.end()) continue;
    for (std::uint32_t idx : it->second) {
      const Polynomial::Term& ts = section_.terms()[idx];
      Monomial om(w);
      for (std::size_t k = 0; k < w; ++k) {
        const std::uint64_t sum = std::uint64_t(ts.mon.exp(k)) + tg.mon.exp(k);
        om.set_exp(k, static_cast<Monomial::Exp>((sum - (p - 1)) / p));
      }
      out.add(std::move(om), ch.mul(ts.coef, tg.coef));
    }
  }
  return out.finish();
}

bool SplittingOperator::is_splitting() const {
  const Polynomial one = Polynomial::constant(ring(), 1);
  return apply(one) == one;
}

SplittingOperator SplittingOperator::normalized(std::uint32_t* rescale) const {
  if (rescale) *rescale = 1;
  Polynomial img = apply(Polynomial::constant(ring(), 1));
  if (img.is_zero() || !img.is_constant()) return *this;
  const std::uint32_t c = img.constant_value();
  if (c == 1) return *this;
  if (rescale) *rescale = c;
  return SplittingOperator(section_.scaled(ring().ch().inv(c)));
}

Polynomial standard_section(const Ring& ring) {
  Monomial m(ring.nvars());
  for (std::size_t k = 0; k < ring.nvars(); ++k)
    m.set_exp(k, static_cast<Monomial::Exp>(ring.p() - 1));
  return Polynomial::monomial(ring, std::move(m), 1);
}

// ---------------------------------------------------------------------------
// IdealSpec

IdealSpec IdealSpec::variables(const Ring& ring, std::vector<VarId> vars) {
  IdealSpec spec(ring);
  spec.kind_ = Kind::Variables;
  std::vector<std::pair<std::size_t, VarId>> indexed;
  for (const VarId& v : vars) {
    auto idx = ring.table().index_of(v);
    if (!idx) throw std::invalid_argument("variable not in table: " + algebra::to_string(v));
    indexed.emplace_back(*idx, v);
  }
  std::sort(indexed.begin(), indexed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  indexed.erase(std::unique(indexed.begin(), indexed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                indexed.end());
  for (const auto& [idx, v] : indexed) {
    spec.var_idx_.push_back(idx);
    spec.vars_.push_back(v);
  }
  return spec;
}

IdealSpec IdealSpec::principal(Polynomial h) {
  if (h.is_zero()) throw std::invalid_argument("principal generator must be nonzero");
  IdealSpec spec(h.ring());
  spec.kind_ = Kind::Principal;
  spec.gen_ = std::move(h);
  return spec;
}

// Accessor granting the construction helpers access to the private state.
struct IdealSpecAccess {
  static IdealSpec make(const Ring& ring, IdealSpec::Kind kind, std::vector<VarId> vars,
                        std::vector<std::size_t> var_idx, std::optional<Polynomial> gen,
                        Pairing pairing, std::uint32_t power) {
    IdealSpec spec(ring);
    spec.kind_ = kind;
    spec.vars_ = std::move(vars);
    spec.var_idx_ = std::move(var_idx);
    spec.gen_ = std::move(gen);
    spec.pairing_ = std::move(pairing);
    spec.power_ = power;
    if (!spec.pairing_.empty()) {
      spec.ext_ = shifted_ring(spec.ring(), spec.pairing_);
      for (const DiagonalPair& pr : spec.pairing_) {
        spec.shift_images_.emplace_back(pr.y, Polynomial::variable(*spec.ext_, pr.x) +
                                                  Polynomial::variable(*spec.ext_, pr.z));
        spec.z_idx_.push_back(*spec.ext_->table().index_of(pr.z));
      }
      // Shifted generators of (S): x and z slots for paired variables in S,
      // the variable itself for unpaired ones.
      for (const VarId& v : spec.vars_) {
        bool paired = false;
        for (const DiagonalPair& pr : spec.pairing_) {
          if (v == pr.x) {
            spec.shifted_member_idx_.push_back(*spec.ext_->table().index_of(pr.x));
            paired = true;
            break;
          }
          if (v == pr.y) {
            spec.shifted_member_idx_.push_back(*spec.ext_->table().index_of(pr.z));
            paired = true;
            break;
          }
        }
        if (!paired)
          spec.shifted_member_idx_.push_back(*spec.ext_->table().index_of(v));
      }
      std::sort(spec.shifted_member_idx_.begin(), spec.shifted_member_idx_.end());
      spec.shifted_member_idx_.erase(
          std::unique(spec.shifted_member_idx_.begin(), spec.shifted_member_idx_.end()),
          spec.shifted_member_idx_.end());
    }
    return spec;
  }
};

IdealSpec IdealSpec::diagonal_power(const Ring& ring, Pairing pairing, std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("diagonal power must be at least 1");
  if (pairing.empty()) throw std::invalid_argument("diagonal ideal requires a pairing");
  return IdealSpecAccess::make(ring, Kind::DiagonalPower, {}, {}, std::nullopt,
                               std::move(pairing), m);
}

IdealSpec IdealSpec::sum(std::vector<IdealSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("undecidable spec");
  const Ring ring = parts.front().ring();
  std::vector<VarId> vars;
  std::optional<Polynomial> gen;
  Pairing pairing;
  std::uint32_t power = 0;
  // Flatten (Sum parts contribute their components) and merge.
  for (IdealSpec& part : parts) {
    ring.require_compatible(part.ring());
    vars.insert(vars.end(), part.vars_.begin(), part.vars_.end());
    if (part.gen_) {
      if (gen || power) throw std::invalid_argument("undecidable spec");
      gen = std::move(part.gen_);
    }
    if (part.power_) {
      if (gen || power) throw std::invalid_argument("undecidable spec");
      pairing = part.pairing_;
      power = part.power_;
    }
  }
  // Pair closure when a diagonal part coexists with variables.
  if (power && !vars.empty()) {
    auto in_vars = [&](const VarId& v) {
      return std::find(vars.begin(), vars.end(), v) != vars.end();
    };
    for (const DiagonalPair& pr : pairing)
      if (in_vars(pr.x) != in_vars(pr.y)) throw std::invalid_argument("undecidable spec");
  }
  // Degenerate back to the plain variants when only one component is present.
  if (!gen && !power) return variables(ring, std::move(vars));
  if (vars.empty() && gen) return principal(std::move(*gen));
  if (vars.empty() && power) return diagonal_power(ring, std::move(pairing), power);
  IdealSpec merged = variables(ring, std::move(vars));
  return IdealSpecAccess::make(ring, Kind::Sum, std::move(merged.vars_),
                               std::move(merged.var_idx_), std::move(gen), std::move(pairing),
                               power);
}

Polynomial IdealSpec::drop_variable_terms(const Polynomial& f) const {
  std::vector<Polynomial::Term> kept;
  for (const Polynomial::Term& t : f.terms()) {
    bool in_vars = false;
    for (std::size_t idx : var_idx_) {
      if (t.mon.exp(idx) > 0) {
        in_vars = true;
        break;
      }
    }
    if (!in_vars) kept.push_back(t);
  }
  return Polynomial::from_terms(ring_, std::move(kept));
}

bool IdealSpec::contains(const Polynomial& f) const {
  ring_.require_compatible(f.ring());
  if (f.is_zero()) return true;
  switch (kind_) {
    case Kind::Variables:
      return drop_variable_terms(f).is_zero();
    case Kind::Principal:
      return algebra::exact_divide(f, *gen_).has_value();
    case Kind::DiagonalPower:
    case Kind::Sum: {
      if (power_) {
        // Monomial membership in shifted coordinates: every shifted term is
        // divisible by a shifted generator of (S) or has z-degree >= m.
        Polynomial sh = substitute(f, shift_images_);
        for (const Polynomial::Term& t : sh.terms()) {
          bool ok = false;
          for (std::size_t idx : shifted_member_idx_) {
            if (t.mon.exp(idx) > 0) {
              ok = true;
              break;
            }
          }
          if (ok) continue;
          std::uint64_t zdeg = 0;
          for (std::size_t idx : z_idx_) zdeg += t.mon.exp(idx);
          if (zdeg < power_) return false;
        }
        return true;
      }
      // Variables + Principal: iterated reduction.
      Polynomial r = drop_variable_terms(f);
      if (r.is_zero()) return true;
      return gen_ && algebra::exact_divide(r, *gen_).has_value();
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Compatibility

namespace {

// Per-bucket image of the duality operator: group the terms of base (= s or
// h*s) by componentwise residue mod p; each class with representative residue
// rho yields sigma(x^{v} * base/s-part) = sum of c * x^{gamma div p} where
// v = (p-1) - rho mod p.  Calls fn(residue, image polynomial).
template <typename Fn>
void for_each_residue_image(const Polynomial& base, Fn&& fn) {
  const Ring& ring = base.ring();
  const std::uint32_t p = ring.p();
  const std::size_t w = ring.nvars();
  std::unordered_map<Monomial, std::vector<std::size_t>, algebra::MonomialHash> buckets;
  for (std::size_t i = 0; i < base.term_count(); ++i) {
    const Monomial& m = base.terms()[i].mon;
    Monomial r(w);
    for (std::size_t k = 0; k < w; ++k)
      r.set_exp(k, static_cast<Monomial::Exp>(m.exp(k) % p));
    buckets[r].push_back(i);
  }
  for (const auto& [rho, idxs] : buckets) {
    PolyBuilder img(ring);
    for (std::size_t i : idxs) {
      const Polynomial::Term& t = base.terms()[i];
      Monomial om(w);
      for (std::size_t k = 0; k < w; ++k)
        om.set_exp(k, static_cast<Monomial::Exp>(t.mon.exp(k) / p));
      img.add(std::move(om), t.coef);
    }
    Monomial v(w);
    for (std::size_t k = 0; k < w; ++k)
      v.set_exp(k, static_cast<Monomial::Exp>(p - 1 - rho.exp(k)));
    fn(v, img.finish());
  }
}

CompatResult compat_variables(const SplittingOperator& op, const IdealSpec& ideal) {
  CompatResult res{true, true, {}};
  if (ideal.vars().empty()) return res;  // zero ideal
  std::vector<std::size_t> sidx;
  for (const VarId& v : ideal.vars()) sidx.push_back(*op.ring().table().index_of(v));
  const std::uint32_t p = op.p();
  for (const Polynomial::Term& t : op.section().terms()) {
    // Input residue v(gamma) lies in (S) iff gamma is not congruent to p-1 on
    // some S-slot; the output monomial is gamma div p componentwise.
    bool input_in = false, output_in = false;
    for (std::size_t idx : sidx) {
      if (t.mon.exp(idx) % p != p - 1) input_in = true;
      if (t.mon.exp(idx) >= p) output_in = true;
    }
    if (input_in && !output_in) {
      res.passed = false;
      res.witness = "section term " + monomial_text(op.ring(), t.mon) +
                    " maps the residue class into the ideal's complement";
      return res;
    }
  }
  return res;
}

CompatResult compat_with_residue_images(const SplittingOperator& op, const IdealSpec& ideal) {
  CompatResult res{true, true, {}};
  const auto check_family = [&](const Polynomial& base, bool require_input_in_vars,
                                const char* what) {
    std::vector<std::size_t> sidx;
    for (const VarId& v : ideal.vars()) sidx.push_back(*op.ring().table().index_of(v));
    for_each_residue_image(base, [&](const Monomial& v, const Polynomial& img) {
      if (!res.passed) return;
      if (require_input_in_vars) {
        bool in_vars = false;
        for (std::size_t idx : sidx)
          if (v.exp(idx) > 0) in_vars = true;
        if (!in_vars) return;
      }
      if (!ideal.contains(img)) {
        res.passed = false;
        res.witness = std::string(what) + " residue " + monomial_text(op.ring(), v) +
                      " has image " + algebra::to_string(img) + " outside the ideal";
      }
    });
  };
  // (h)-part: sigma(h * x^v) for every residue class of h*s.
  if (ideal.generator()) check_family(*ideal.generator() * op.section(), false, "principal");
  // (S)-part: sigma(x^v) for residues v lying in (S), read off the section.
  if (!ideal.vars().empty()) check_family(op.section(), true, "variable");
  return res;
}

// Shared candidate loop; returns the smallest index whose check failed, or
// the candidate count when all passed.  Deterministic under parallelism.
template <typename Check>
std::size_t scan_candidates(const std::vector<Monomial>& cands, const Check& check) {
  std::atomic<std::size_t> fail{cands.size()};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (omp_get_max_threads() > 1)
#endif
  for (long long k = 0; k < static_cast<long long>(cands.size()); ++k) {
    const std::size_t idx = static_cast<std::size_t>(k);
    if (idx >= fail.load(std::memory_order_relaxed)) continue;
    if (!check(cands[idx])) {
      std::size_t cur = fail.load(std::memory_order_relaxed);
      while (idx < cur && !fail.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  return fail.load();
}

CompatResult compat_bounded_diagonal(const SplittingOperator& op, const IdealSpec& ideal) {
  CompatResult res{true, false, {}};
  ShiftedEnumerator eng(op.ring(), ideal.pairing());
  const std::uint32_t p = op.p();
  const std::uint32_t m = ideal.power();
  const std::uint64_t formula = op.section().degree() + std::uint64_t(p) * (m + 1) + 2;
  const std::uint64_t bound = eng.clamped_bound(formula, m + p, kCandidateBudget);
  eng.warm(bound);
  // Members of (S) + I_diag^m among shifted monomials: divisible by a shifted
  // S-generator or of z-degree >= m.
  std::vector<std::size_t> member_idx;
  for (const VarId& v : ideal.vars()) {
    bool paired = false;
    for (const DiagonalPair& pr : ideal.pairing()) {
      if (v == pr.x) {
        member_idx.push_back(*eng.ext().table().index_of(pr.x));
        paired = true;
      } else if (v == pr.y) {
        member_idx.push_back(*eng.ext().table().index_of(pr.z));
        paired = true;
      }
      if (paired) break;
    }
    if (!paired) member_idx.push_back(*eng.ext().table().index_of(v));
  }
  const std::uint64_t min_z = ideal.vars().empty() ? m : 0;
  std::vector<Monomial> cands = eng.candidates(min_z, bound);
  auto is_member = [&](const Monomial& cand) {
    for (std::size_t idx : member_idx)
      if (cand.exp(idx) > 0) return true;
    return eng.z_degree(cand) >= m;
  };
  auto check = [&](const Monomial& cand) {
    if (!is_member(cand)) return true;
    Polynomial img = op.apply(eng.unshift_monomial(cand));
    return ideal.contains(img);
  };
  const std::size_t fail = scan_candidates(cands, check);
  if (fail < cands.size()) {
    res.passed = false;
    res.witness = "shifted monomial " + monomial_text(eng.ext(), cands[fail]) +
                  " has image outside the ideal (degree bound " + std::to_string(bound) + ")";
  } else {
    res.witness = "verified on all ideal monomials through shifted degree " +
                  std::to_string(bound);
  }
  return res;
}

}  // namespace

CompatResult compatibly_splits_detail(const SplittingOperator& op, const IdealSpec& ideal) {
  op.ring().require_compatible(ideal.ring());
  if (!op.is_splitting()) throw std::invalid_argument("operator is not a splitting");
  switch (ideal.kind()) {
    case IdealSpec::Kind::Variables:
      return compat_variables(op, ideal);
    case IdealSpec::Kind::Principal:
      return compat_with_residue_images(op, ideal);
    case IdealSpec::Kind::DiagonalPower:
      return compat_bounded_diagonal(op, ideal);
    case IdealSpec::Kind::Sum:
      if (ideal.power()) return compat_bounded_diagonal(op, ideal);
      return compat_with_residue_images(op, ideal);
  }
  throw std::logic_error("unreachable ideal kind");
}

bool compatibly_splits(const SplittingOperator& op, const IdealSpec& ideal) {
  return compatibly_splits_detail(op, ideal).passed;
}

bool is_maximally_split_diagonal(const SplittingOperator& op, const Pairing& pairing,
                                 std::uint32_t d) {
  if (!op.is_splitting()) throw std::invalid_argument("operator is not a splitting");
  const std::uint64_t order = vanishing_order_on_diagonal(op.section(), pairing);
  const std::uint64_t target = std::uint64_t(d) * (op.p() - 1);
  if (order > target) throw std::domain_error("impossible for a splitting");
  return order == target;
}

CompatResult maximality_operator_check_detail(const SplittingOperator& op, const Pairing& pairing,
                                              std::uint32_t m_max, std::uint64_t deg_bound) {
  if (!op.is_splitting()) throw std::invalid_argument("operator is not a splitting");
  CompatResult res{true, false, {}};
  if (pairing.empty()) {
    res.witness = "empty pairing: nothing to verify";
    return res;
  }
  ShiftedEnumerator eng(op.ring(), pairing);
  const std::uint32_t p = op.p();
  const std::uint64_t formula = op.section().degree() + std::uint64_t(p) * (m_max + 1) + 2;
  const std::uint64_t bound =
      deg_bound ? deg_bound
                : eng.clamped_bound(formula, std::uint64_t(m_max) * p + 1, kCandidateBudget);
  eng.warm(bound);
  std::vector<Monomial> cands = eng.candidates(1, bound);
  // A candidate of z-degree a lies in I^{mp+1} for every m <= (a-1)/p; its
  // image must have z-order >= m+1 for each such m <= m_max, i.e. at least
  // min(m_max, (a-1)/p) + 1 — one pass covers the whole conjunction.
  auto required_order = [&](const Monomial& cand) -> std::uint64_t {
    const std::uint64_t a = eng.z_degree(cand);
    return std::min<std::uint64_t>(m_max, (a - 1) / p) + 1;
  };
  auto check = [&](const Monomial& cand) {
    Polynomial img = op.apply(eng.unshift_monomial(cand));
    if (img.is_zero()) return true;
    return eng.shifted_z_order(img) >= required_order(cand);
  };
  const std::size_t fail = scan_candidates(cands, check);
  if (fail < cands.size()) {
    const Monomial& cand = cands[fail];
    Polynomial img = op.apply(eng.unshift_monomial(cand));
    res.passed = false;
    res.witness = "shifted monomial " + monomial_text(eng.ext(), cand) +
                  " has image of diagonal order " +
                  std::to_string(eng.shifted_z_order(img)) + " < " +
                  std::to_string(required_order(cand)) + " (degree bound " +
                  std::to_string(bound) + ")";
  } else {
    res.witness = "verified for m <= " + std::to_string(m_max) +
                  " through shifted degree " + std::to_string(bound);
  }
  return res;
}

bool maximality_operator_check(const SplittingOperator& op, const Pairing& pairing,
                               std::uint32_t m_max, std::uint64_t deg_bound) {
  return maximality_operator_check_detail(op, pairing, m_max, deg_bound).passed;
}

// ---------------------------------------------------------------------------
// ShiftedEnumerator

ShiftedEnumerator::ShiftedEnumerator(const Ring& base, const Pairing& pairing)
    : base_(base), pairing_(pairing), ext_(shifted_ring(base, pairing)) {
  std::vector<bool> is_paired_y(ext_.nvars(), false), is_z(ext_.nvars(), false);
  for (const DiagonalPair& pr : pairing_) {
    is_paired_y[*ext_.table().index_of(pr.y)] = true;
    const std::size_t zi = *ext_.table().index_of(pr.z);
    is_z[zi] = true;
    z_slots_.push_back(zi);
    z_list_.push_back(pr.z);
    shift_images_.emplace_back(pr.y, Polynomial::variable(ext_, pr.x) +
                                         Polynomial::variable(ext_, pr.z));
    diff_powers_.push_back({Polynomial::constant(base_, 1)});
  }
  for (std::size_t k = 0; k < ext_.nvars(); ++k) {
    if (is_paired_y[k] || is_z[k]) continue;
    free_slots_.push_back(k);
    free_base_idx_.push_back(*base_.table().index_of(ext_.table().at(k)));
  }
}

std::uint64_t ShiftedEnumerator::z_degree(const Monomial& cand) const {
  std::uint64_t d = 0;
  for (std::size_t idx : z_slots_) d += cand.exp(idx);
  return d;
}

void ShiftedEnumerator::warm(std::uint64_t bound) {
  for (std::size_t i = 0; i < pairing_.size(); ++i) {
    Polynomial diff = Polynomial::variable(base_, pairing_[i].y) -
                      Polynomial::variable(base_, pairing_[i].x);
    auto& cache = diff_powers_[i];
    while (cache.size() <= bound) cache.push_back(cache.back() * diff);
  }
}

Polynomial ShiftedEnumerator::unshift_monomial(const Monomial& cand) const {
  Monomial m(base_.nvars());
  for (std::size_t s = 0; s < free_slots_.size(); ++s)
    m.set_exp(free_base_idx_[s], cand.exp(free_slots_[s]));
  Polynomial out = Polynomial::monomial(base_, std::move(m), 1);
  for (std::size_t i = 0; i < z_slots_.size(); ++i) {
    const Monomial::Exp e = cand.exp(z_slots_[i]);
    if (e == 0) continue;
    if (e >= diff_powers_[i].size())
      throw std::logic_error("difference power cache not warmed far enough");
    out = out * diff_powers_[i][e];
  }
  return out;
}

std::uint64_t ShiftedEnumerator::shifted_z_order(const Polynomial& g) const {
  return min_degree_in(substitute(g, shift_images_), z_list_);
}

std::vector<Monomial> ShiftedEnumerator::candidates(std::uint64_t min_z,
                                                    std::uint64_t bound) const {
  std::vector<Monomial> out;
  Monomial cur(ext_.nvars());
  // Fill the free slots with total degree <= budget.
  auto rec_free = [&](auto&& self, std::size_t pos, std::uint64_t budget) -> void {
    if (pos == free_slots_.size()) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= budget; ++e) {
      cur.set_exp(free_slots_[pos], static_cast<Monomial::Exp>(e));
      self(self, pos + 1, budget - e);
    }
    cur.set_exp(free_slots_[pos], 0);
  };
  // Fill the z slots with total degree exactly `remaining`, then hand the
  // leftover degree budget to the free slots.
  auto rec_z = [&](auto&& self, std::size_t pos, std::uint64_t remaining,
                   std::uint64_t x_budget) -> void {
    if (pos + 1 == z_slots_.size()) {
      cur.set_exp(z_slots_[pos], static_cast<Monomial::Exp>(remaining));
      rec_free(rec_free, 0, x_budget);
      cur.set_exp(z_slots_[pos], 0);
      return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
      cur.set_exp(z_slots_[pos], static_cast<Monomial::Exp>(e));
      self(self, pos + 1, remaining - e, x_budget);
    }
    cur.set_exp(z_slots_[pos], 0);
  };
  for (std::uint64_t a = min_z; a <= bound; ++a) {
    if (z_slots_.empty()) {
      if (a == 0) rec_free(rec_free, 0, bound);
      continue;
    }
    rec_z(rec_z, 0, a, bound - a);
  }
  return out;
}

double ShiftedEnumerator::estimate(std::uint64_t min_z, std::uint64_t bound) const {
  auto binom = [](std::uint64_t n, std::uint64_t k) -> double {
    double r = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
  };
  const std::uint64_t Z = z_slots_.size(), F = free_slots_.size();
  double total = 0.0;
  for (std::uint64_t a = min_z; a <= bound; ++a) {
    const double zc = Z == 0 ? (a == 0 ? 1.0 : 0.0) : binom(a + Z - 1, Z - 1);
    const double xc = binom(bound - a + F, F);
    total += zc * xc;
    if (total > 1e18) return total;
  }
  return total;
}

std::uint64_t ShiftedEnumerator::clamped_bound(std::uint64_t formula_bound,
                                               std::uint64_t floor_bound, double budget) const {
  std::uint64_t b = std::max(formula_bound, floor_bound);
  while (b > floor_bound && estimate(1, b) > budget) --b;
  return b;
}

}  // namespace fsplit::splitting
