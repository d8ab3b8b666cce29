#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsplit::algebra {

namespace {

// Buffered contributions are merged once the buffer reaches this many entries.
constexpr std::size_t kFlushCap = std::size_t(1) << 19;
// Products with at most this many term pairs stay on the serial path.
constexpr std::uint64_t kParallelMulThreshold = std::uint64_t(1) << 16;

bool term_less_desc(const std::pair<Monomial, std::uint32_t>& a,
                    const std::pair<Monomial, std::uint32_t>& b) {
  return a.first.lex_cmp(b.first) > 0;
}

}  // namespace

Ring::Ring(Characteristic p, TablePtr table) : p_(p), table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("ring requires a variable table");
}

bool Ring::compatible_with(const Ring& o) const {
  if (p_ != o.p_) return false;
  return table_ == o.table_ || *table_ == *o.table_;
}

void Ring::require_compatible(const Ring& o) const {
  if (!compatible_with(o)) throw std::invalid_argument("incompatible context");
}

Polynomial Polynomial::zero(const Ring& ring) { return Polynomial(ring, {}); }

Polynomial Polynomial::constant(const Ring& ring, std::uint64_t c) {
  std::uint32_t r = ring.ch().reduce(c);
  if (r == 0) return zero(ring);
  return Polynomial(ring, {Term{Monomial(ring.nvars()), r}});
}

Polynomial Polynomial::variable(const Ring& ring, const VarId& v) {
  auto idx = ring.table().index_of(v);
  if (!idx) throw std::invalid_argument("variable not in table: " + to_string(v));
  Monomial m(ring.nvars());
  m.set_exp(*idx, 1);
  return Polynomial(ring, {Term{std::move(m), 1}});
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m, std::uint64_t c) {
  if (m.width() != ring.nvars()) throw std::invalid_argument("monomial width mismatch");
  std::uint32_t r = ring.ch().reduce(c);
  if (r == 0) return zero(ring);
  return Polynomial(ring, {Term{std::move(m), r}});
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  PolyBuilder b(ring);
  for (Term& t : terms) b.add(std::move(t.mon), t.coef);
  return b.finish();
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

std::uint32_t Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_[0].coef;
}

std::uint64_t Polynomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

bool Polynomial::is_homogeneous(std::uint64_t* deg_out) const noexcept {
  if (terms_.empty()) {
    if (deg_out) *deg_out = 0;
    return true;
  }
  std::uint64_t d = terms_[0].mon.degree();
  for (const Term& t : terms_)
    if (t.mon.degree() != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::lex_min_monomial() const {
  if (terms_.empty()) throw std::domain_error("minimal monomial of zero polynomial");
  return terms_.back().mon;
}

std::uint32_t Polynomial::coefficient_of(const Monomial& m) const noexcept {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mon.lex_cmp(key) > 0; });
  if (it != terms_.end() && it->mon == m) return it->coef;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  ring_.require_compatible(o.ring_);
  const Characteristic& ch = ring_.ch();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = terms_[i].mon.lex_cmp(o.terms_[j].mon);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = ch.add(terms_[i].coef, o.terms_[j].coef);
      if (s != 0) out.push_back(Term{terms_[i].mon, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(ring_.ch().neg(1));
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  const Characteristic& ch = ring_.ch();
  std::uint32_t r = ch.reduce(c);
  if (r == 0) return zero(ring_);
  if (r == 1) return *this;
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coef = ch.mul(t.coef, r);
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  ring_.require_compatible(o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].coef != o.terms_[k].coef || !(terms_[k].mon == o.terms_[k].mon))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// PolyBuilder

PolyBuilder::PolyBuilder(const Ring& ring) : ring_(ring) {}

void PolyBuilder::add(Monomial m, std::uint64_t c) {
  if (m.width() != ring_.nvars()) throw std::invalid_argument("monomial width mismatch");
  std::uint32_t r = ring_.ch().reduce(c);
  if (r == 0) return;
  buf_.emplace_back(std::move(m), r);
  if (buf_.size() >= kFlushCap) flush();
}

void PolyBuilder::add(const Polynomial& f, std::uint64_t scale) {
  ring_.require_compatible(f.ring());
  std::uint32_t s = ring_.ch().reduce(scale);
  if (s == 0) return;
  for (const Polynomial::Term& t : f.terms()) add(t.mon, ring_.ch().mul(t.coef, s));
}

void PolyBuilder::add_shifted(const Polynomial& f, const Monomial& shift,
                              std::uint64_t scale) {
  ring_.require_compatible(f.ring());
  std::uint32_t s = ring_.ch().reduce(scale);
  if (s == 0) return;
  for (const Polynomial::Term& t : f.terms()) add(t.mon * shift, ring_.ch().mul(t.coef, s));
}

void PolyBuilder::flush() {
  if (buf_.empty()) return;
  std::sort(buf_.begin(), buf_.end(), term_less_desc);
  const Characteristic& ch = ring_.ch();
  std::vector<std::pair<Monomial, std::uint32_t>> merged;
  merged.reserve(sorted_.size() + buf_.size());
  std::size_t i = 0, j = 0;
  auto push = [&](const Monomial& m, std::uint32_t c) {
    if (!merged.empty() && merged.back().first == m) {
      merged.back().second = ch.add(merged.back().second, c);
      if (merged.back().second == 0) merged.pop_back();
    } else if (c != 0) {
      merged.emplace_back(m, c);
    }
  };
  while (i < sorted_.size() && j < buf_.size()) {
    int c = sorted_[i].first.lex_cmp(buf_[j].first);
    if (c >= 0) {
      push(sorted_[i].first, sorted_[i].second);
      ++i;
    } else {
      push(buf_[j].first, buf_[j].second);
      ++j;
    }
  }
  for (; i < sorted_.size(); ++i) push(sorted_[i].first, sorted_[i].second);
  for (; j < buf_.size(); ++j) push(buf_[j].first, buf_[j].second);
  sorted_ = std::move(merged);
  buf_.clear();
}

void PolyBuilder::merge(PolyBuilder&& other) {
  ring_.require_compatible(other.ring_);
  other.flush();
  for (auto& e : other.sorted_) {
    buf_.emplace_back(std::move(e.first), e.second);
    if (buf_.size() >= kFlushCap) flush();
  }
  other.sorted_.clear();
}

Polynomial PolyBuilder::finish() {
  flush();
  std::vector<Polynomial::Term> terms;
  terms.reserve(sorted_.size());
  for (auto& e : sorted_) terms.push_back(Polynomial::Term{std::move(e.first), e.second});
  sorted_.clear();
  return Polynomial(ring_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Products

Polynomial mul_serial(const Polynomial& a, const Polynomial& b) {
  a.ring().require_compatible(b.ring());
  const Characteristic& ch = a.ring().ch();
  // Independent reference path: node-based ordered-map accumulation.
  std::map<Monomial, std::uint32_t, LexDescending> acc;
  for (const Polynomial::Term& ta : a.terms()) {
    for (const Polynomial::Term& tb : b.terms()) {
      Monomial m = ta.mon * tb.mon;
      std::uint32_t c = ch.mul(ta.coef, tb.coef);
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) {
        it->second = ch.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& e : acc) terms.push_back(Polynomial::Term{e.first, e.second});
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  ring_.require_compatible(o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
  const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
  const std::uint64_t pairs =
      std::uint64_t(big.terms_.size()) * std::uint64_t(small.terms_.size());

#ifdef _OPENMP
  if (pairs > kParallelMulThreshold && omp_get_max_threads() > 1) {
    const std::size_t n = big.terms_.size();
    const int nthreads = omp_get_max_threads();
    std::vector<PolyBuilder> parts;
    parts.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) parts.emplace_back(ring_);
#pragma omp parallel num_threads(nthreads)
    {
      const int tid = omp_get_thread_num();
      PolyBuilder& local = parts[tid];
#pragma omp for schedule(static)
      for (long long k = 0; k < static_cast<long long>(n); ++k) {
        const Term& t = big.terms_[static_cast<std::size_t>(k)];
        local.add_shifted(small, t.mon, t.coef);
      }
    }
    PolyBuilder out(ring_);
    for (PolyBuilder& part : parts) out.merge(std::move(part));
    return out.finish();
  }
#endif

  PolyBuilder out(ring_);
  for (const Term& t : big.terms_) out.add_shifted(small, t.mon, t.coef);
  return out.finish();
}

Polynomial poly_pow(const Polynomial& a, std::uint64_t e) {
  Polynomial acc = Polynomial::constant(a.ring(), 1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Substitution

Polynomial substitute(const Polynomial& f,
                      const std::vector<std::pair<VarId, Polynomial>>& images) {
  const Ring& src = f.ring();
  const Ring target = images.empty() ? src : images.front().second.ring();
  if (src.p() != target.p()) throw std::invalid_argument("incompatible context");

  // Per source-variable plan: either an identity slot in the target table or
  // an image polynomial with a power cache.
  struct Slot {
    std::ptrdiff_t identity_idx = -1;          // >= 0: carried through
    const Polynomial* image = nullptr;         // != null: substituted
    std::vector<Polynomial> powers;            // image^0, image^1, ...
  };
  std::vector<Slot> slots(src.nvars());

  for (const auto& [v, img] : images) {
    auto sidx = src.table().index_of(v);
    if (!sidx) throw std::invalid_argument("substituted variable not in source table");
    target.require_compatible(img.ring());
    if (slots[*sidx].image) throw std::invalid_argument("duplicate substitution for variable");
    slots[*sidx].image = &img;
  }

  // Max exponent per substituted variable (to size the power caches), and
  // identity checks for the untouched variables that actually occur.
  std::vector<Monomial::Exp> max_exp(src.nvars(), 0);
  for (const Polynomial::Term& t : f.terms())
    for (std::size_t k = 0; k < src.nvars(); ++k)
      max_exp[k] = std::max(max_exp[k], t.mon.exp(k));

  for (std::size_t k = 0; k < src.nvars(); ++k) {
    Slot& s = slots[k];
    if (s.image) {
      s.powers.reserve(max_exp[k] + 1);
      s.powers.push_back(Polynomial::constant(target, 1));
      for (Monomial::Exp e = 1; e <= max_exp[k]; ++e)
        s.powers.push_back(s.powers.back() * *s.image);
    } else {
      auto tidx = target.table().index_of(src.table().at(k));
      if (tidx) {
        s.identity_idx = static_cast<std::ptrdiff_t>(*tidx);
      } else if (max_exp[k] > 0) {
        throw std::invalid_argument("unmapped variable not present in target table");
      }
    }
  }

  const auto expand_term = [&](const Polynomial::Term& t, PolyBuilder& out) {
    Monomial carried(target.nvars());
    for (std::size_t k = 0; k < src.nvars(); ++k) {
      if (slots[k].identity_idx >= 0 && t.mon.exp(k) > 0)
        carried.set_exp(static_cast<std::size_t>(slots[k].identity_idx), t.mon.exp(k));
    }
    Polynomial acc = Polynomial::monomial(target, std::move(carried), t.coef);
    for (std::size_t k = 0; k < src.nvars(); ++k) {
      if (slots[k].image && t.mon.exp(k) > 0) acc = acc * slots[k].powers[t.mon.exp(k)];
    }
    out.add(acc);
  };

#ifdef _OPENMP
  if (f.term_count() > 1024 && omp_get_max_threads() > 1) {
    const int nthreads = omp_get_max_threads();
    std::vector<PolyBuilder> parts;
    parts.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) parts.emplace_back(target);
#pragma omp parallel num_threads(nthreads)
    {
      PolyBuilder& local = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
      for (long long k = 0; k < static_cast<long long>(f.term_count()); ++k)
        expand_term(f.terms()[static_cast<std::size_t>(k)], local);
    }
    PolyBuilder out(target);
    for (PolyBuilder& part : parts) out.merge(std::move(part));
    return out.finish();
  }
#endif

  PolyBuilder out(target);
  for (const Polynomial::Term& t : f.terms()) expand_term(t, out);
  return out.finish();
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  f.ring().require_compatible(g.ring());
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return Polynomial::zero(f.ring());
  const Characteristic& ch = f.ring().ch();
  const Polynomial::Term& glt = g.leading_term();
  const std::uint32_t glt_inv = ch.inv(glt.coef);

  if (g.term_count() == 1) {
    // Monomial divisor: divide term by term instead of running the reduction
    // loop, which rebuilds the remainder on every step.
    std::vector<Polynomial::Term> q;
    q.reserve(f.term_count());
    for (const Polynomial::Term& t : f.terms()) {
      if (!glt.mon.divides(t.mon)) return std::nullopt;
      q.push_back(Polynomial::Term{glt.mon.divide_into(t.mon), ch.mul(t.coef, glt_inv)});
    }
    return Polynomial::from_terms(f.ring(), std::move(q));
  }

  Polynomial r = f;
  std::vector<Polynomial::Term> q;
  while (!r.is_zero()) {
    const Polynomial::Term& rlt = r.leading_term();
    if (!glt.mon.divides(rlt.mon)) return std::nullopt;
    Monomial qm = glt.mon.divide_into(rlt.mon);
    std::uint32_t qc = ch.mul(rlt.coef, glt_inv);
    // r -= (qm, qc) * g
    PolyBuilder sub(f.ring());
    sub.add(r);
    sub.add_shifted(g, qm, ch.neg(qc));
    q.push_back(Polynomial::Term{std::move(qm), qc});
    r = sub.finish();
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

std::uint64_t min_degree_in(const Polynomial& f, const std::vector<VarId>& vars) {
  if (f.is_zero()) return kInfiniteDegree;
  std::vector<std::size_t> idx;
  idx.reserve(vars.size());
  for (const VarId& v : vars) {
    auto i = f.ring().table().index_of(v);
    if (!i) throw std::invalid_argument("variable not in table: " + to_string(v));
    idx.push_back(*i);
  }
  std::uint64_t best = kInfiniteDegree;
  for (const Polynomial::Term& t : f.terms()) {
    std::uint64_t d = 0;
    for (std::size_t i : idx) d += t.mon.exp(i);
    best = std::min(best, d);
    if (best == 0) break;
  }
  return best;
}

Polynomial into_ring(const Polynomial& f, const Ring& target) {
  if (f.ring().p() != target.p()) throw std::invalid_argument("incompatible context");
  const VariableTable& st = f.ring().table();
  std::vector<std::ptrdiff_t> map(st.size(), -1);
  for (std::size_t k = 0; k < st.size(); ++k) {
    auto idx = target.table().index_of(st.at(k));
    if (idx) map[k] = static_cast<std::ptrdiff_t>(*idx);
  }
  PolyBuilder out(target);
  for (const Polynomial::Term& t : f.terms()) {
    Monomial m(target.nvars());
    for (std::size_t k = 0; k < st.size(); ++k) {
      if (t.mon.exp(k) == 0) continue;
      if (map[k] < 0)
        throw std::invalid_argument("polynomial not supported in target table");
      m.set_exp(static_cast<std::size_t>(map[k]), t.mon.exp(k));
    }
    out.add(std::move(m), t.coef);
  }
  return out.finish();
}

}  // namespace fsplit::algebra
