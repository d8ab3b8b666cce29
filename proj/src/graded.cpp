#include "fsplit/graded.hpp"

#include "fsplit/text_io.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsplit::graded {

using algebra::Characteristic;
using algebra::Monomial;
using algebra::PolyBuilder;
using algebra::Polynomial;
using algebra::Ring;
using algebra::VarId;
using splitting::CompatResult;
using splitting::Pairing;
using splitting::ShiftedEnumerator;
using splitting::SplittingOperator;

BigInt binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < k) return 0;
  k = std::min<std::int64_t>(k, m - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;  // exact: r is C(m-k+i, i) after this step
  }
  return r;
}

EllRanks ell_ranks(std::uint16_t n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  Characteristic chk(p);  // validates primality
  EllRanks out{n, p, {}};
  for (std::uint32_t j = 0; j <= n; ++j) {
    BigInt v = binomial(std::int64_t(j) * p + n, n);
    for (std::uint32_t i = 1; i <= j; ++i) v -= binomial(std::int64_t(i) + n, n) * out.ranks[j - i];
    if (v < 0) throw std::domain_error("negative rank in the ell recursion");
    out.ranks.push_back(std::move(v));
  }
  BigInt total = 0;
  for (const BigInt& r : out.ranks) total += r;
  BigInt pn = 1;
  for (std::uint16_t i = 0; i < n; ++i) pn *= p;
  if (total != pn) throw std::logic_error("ell ranks do not sum to p^n");
  return out;
}

std::string EllRanks::to_json() const {
  std::string s = "{\"n\":" + std::to_string(n) + ",\"p\":" + std::to_string(p) + ",\"ranks\":[";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) s += ",";
    s += ranks[i].str();
  }
  s += "]}";
  return s;
}

bool check_graded_dimension_identity(std::uint16_t n, std::uint32_t p, std::uint32_t d_max) {
  if (d_max < n) throw std::invalid_argument("d_max must be at least n");
  EllRanks ell = ell_ranks(n, p);
  for (std::uint32_t d = 0; d <= d_max; ++d) {
    BigInt lhs = 0;
    for (std::uint32_t j = 0; j <= n; ++j)
      lhs += ell.ranks[j] * binomial(std::int64_t(d) - j + n, n);
    if (lhs != binomial(std::int64_t(d) * p + n, n)) return false;
  }
  return true;
}

namespace {

// Total degree when f is homogeneous; nullopt otherwise (zero counts as
// homogeneous of degree 0).
std::optional<std::uint64_t> homogeneous_degree(const Polynomial& f) {
  std::optional<std::uint64_t> deg;
  for (const Polynomial::Term& t : f.terms()) {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < f.ring().nvars(); ++k) d += t.mon.exp(k);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg ? deg : std::optional<std::uint64_t>(0);
}

std::string monomial_text(const Ring& ring, const Monomial& m) {
  return algebra::to_string(Polynomial::monomial(ring, m, 1));
}

// Parallel first-failure scan (mirrors the splitting module's bounded checks).
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

constexpr double kCandidateBudget = 2.0e5;

}  // namespace

Polynomial sigma_degree_zero(const SplittingOperator& op, const Polynomial& m) {
  const Ring& ring = op.ring();
  ring.require_compatible(m.ring());
  const auto sdeg = homogeneous_degree(op.section());
  if (!sdeg || *sdeg != std::uint64_t(op.p() - 1) * ring.nvars())
    throw std::invalid_argument("section is not homogeneous of degree (p-1) * nvars");
  const auto d = homogeneous_degree(m);
  if (!d) throw std::invalid_argument("input is not homogeneous");
  if (*d % op.p() != 0) return Polynomial::zero(ring);
  Polynomial out = op.apply(m);
  const auto od = homogeneous_degree(out);
  if (!od || (!out.is_zero() && *od != *d / op.p()))
    throw std::logic_error("graded operator produced an inhomogeneous image");
  return out;
}

Ring rees_extension(const Ring& base) {
  if (base.table().contains(algebra::var_t()))
    throw std::invalid_argument("ring already has a Rees variable");
  std::vector<VarId> vars = base.table().vars();
  vars.push_back(algebra::var_t());
  return Ring(Characteristic(base.p()), algebra::make_table(std::move(vars)));
}

Polynomial sigma_t_apply(const SplittingOperator& op, const Polynomial& g) {
  const Ring& base = op.ring();
  const Ring& ext = g.ring();
  const std::size_t nb = base.nvars();
  bool shape_ok = ext.nvars() == nb + 1 && ext.p() == base.p() &&
                  ext.table().at(nb) == algebra::var_t();
  for (std::size_t k = 0; shape_ok && k < nb; ++k)
    shape_ok = ext.table().at(k) == base.table().at(k);
  if (!shape_ok)
    throw std::invalid_argument("polynomial must live in the Rees extension of the operator ring");

  const std::uint32_t p = op.p();
  // Group the terms by t-exponent, keeping only the multiples of p.
  std::map<std::uint64_t, std::vector<Polynomial::Term>> strides;
  for (const Polynomial::Term& t : g.terms()) {
    const std::uint64_t i = t.mon.exp(nb);
    if (i % p != 0) continue;
    Monomial m(nb);
    for (std::size_t k = 0; k < nb; ++k) m.set_exp(k, t.mon.exp(k));
    strides[i / p].push_back({std::move(m), t.coef});
  }
  PolyBuilder out(ext);
  for (auto& [i, terms] : strides) {
    Polynomial img = op.apply(Polynomial::from_terms(base, std::move(terms)));
    for (const Polynomial::Term& t : img.terms()) {
      Monomial m(nb + 1);
      for (std::size_t k = 0; k < nb; ++k) m.set_exp(k, t.mon.exp(k));
      m.set_exp(nb, static_cast<Monomial::Exp>(i));
      out.add(std::move(m), t.coef);
    }
  }
  return out.finish();
}

CompatResult rees_compatibility_check_detail(const SplittingOperator& op, const Pairing& pairing,
                                             std::uint32_t d, std::uint32_t m_max,
                                             std::uint64_t deg_bound) {
  CompatResult res{true, false, {}};
  if (!is_maximally_split_diagonal(op, pairing, d)) {
    res.passed = false;
    res.witness = "section is not maximally split along the diagonal at order " +
                  std::to_string(std::uint64_t(d) * (op.p() - 1));
    return res;
  }
  if (pairing.empty()) {
    res.witness = "empty pairing: nothing to verify";
    return res;
  }
  ShiftedEnumerator eng(op.ring(), pairing);
  const std::uint32_t p = op.p();
  const std::uint64_t floor_bound = std::uint64_t(m_max) * p + 1;
  const std::uint64_t formula = op.section().degree() + std::uint64_t(p) * (m_max + 1) + 2;
  const std::uint64_t bound =
      deg_bound ? deg_bound : eng.clamped_bound(formula, floor_bound, kCandidateBudget);
  if (bound < floor_bound)
    throw std::invalid_argument("degree bound too small for the requested m_max");
  eng.warm(bound);
  std::vector<Monomial> cands = eng.candidates(1, bound);

  // A candidate of z-degree exactly pm generates a graded piece of I^{pm}
  // (image must land in I^m); z-degree pm+1 the exceptional piece I^{pm+1}
  // (image in I^{m+1}).  Other z-degrees carry no constraint at this m range.
  auto required_order = [&](const Monomial& cand) -> std::uint64_t {
    const std::uint64_t a = eng.z_degree(cand);
    std::uint64_t req = 0;
    if (a % p == 0 && a / p <= m_max) req = std::max(req, a / p);
    if ((a - 1) % p == 0 && (a - 1) / p <= m_max) req = std::max(req, (a - 1) / p + 1);
    return req;
  };
  auto check = [&](const Monomial& cand) {
    const std::uint64_t req = required_order(cand);
    if (req == 0) return true;
    Polynomial img = op.apply(eng.unshift_monomial(cand));
    if (img.is_zero()) return true;
    return eng.shifted_z_order(img) >= req;
  };
  const std::size_t fail = scan_candidates(cands, check);
  if (fail < cands.size()) {
    const Monomial& cand = cands[fail];
    Polynomial img = op.apply(eng.unshift_monomial(cand));
    res.passed = false;
    res.witness = "shifted monomial " + monomial_text(eng.ext(), cand) +
                  " of diagonal degree " + std::to_string(eng.z_degree(cand)) +
                  " has image of diagonal order " + std::to_string(eng.shifted_z_order(img)) +
                  " < " + std::to_string(required_order(cand)) + " (degree bound " +
                  std::to_string(bound) + ")";
  } else {
    res.witness = "Rees compatibility verified for m <= " + std::to_string(m_max) +
                  " through shifted degree " + std::to_string(bound);
  }
  return res;
}

bool rees_compatibility_check(const SplittingOperator& op, const Pairing& pairing,
                              std::uint32_t d, std::uint32_t m_max, std::uint64_t deg_bound) {
  return rees_compatibility_check_detail(op, pairing, d, m_max, deg_bound).passed;
}

}  // namespace fsplit::graded
