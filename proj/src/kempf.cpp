#include "fsplit/kempf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fsplit/diagonal_section.hpp"

namespace fsplit::kempf {

using algebra::Monomial;
using algebra::Polynomial;
using algebra::Ring;
using algebra::VarId;
using splitting::IdealSpec;
using splitting::SplittingOperator;

bool is_kempf_vector(const KempfVector& a, std::uint16_t n) {
  if (a.size() != n) throw std::invalid_argument("vector length must equal the rank");
  for (std::uint16_t j = 1; j <= n; ++j) {
    if (j > 1 && a[j - 1] > a[j - 2]) return false;
    if (a[j - 1] + j > n) return false;  // n - a_j >= j
  }
  return a[n - 1] == 0;
}

std::uint32_t codimension(const KempfVector& a) {
  std::uint32_t sum = 0;
  for (std::uint16_t e : a) sum += e;
  return sum;
}

KempfVector rectangle_vector(const RectangularKempf& r, std::uint16_t n) {
  KempfVector a(n, 0);
  for (std::uint16_t i = 0; i < r.s; ++i) a[i] = r.t;
  if (!is_kempf_vector(a, n)) throw std::invalid_argument("rectangle does not fit the rank");
  return a;
}

std::vector<RectangularKempf> rectangular_vectors(std::uint16_t n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<RectangularKempf> out;
  for (std::uint16_t t = 1; t < n; ++t)
    for (std::uint16_t s = 1; s + t <= n; ++s) out.push_back({t, s});
  return out;
}

std::vector<RectangularKempf> decompose_into_rectangulars(const KempfVector& a,
                                                          std::uint16_t n) {
  if (!is_kempf_vector(a, n)) throw std::invalid_argument("not a Kempf vector");
  std::vector<RectangularKempf> out;
  std::uint16_t prev = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::uint16_t t = a[j];
    if (t != 0 && t != prev) {
      std::uint16_t width = 0;
      while (width < n && a[width] >= t) ++width;
      out.push_back({t, width});
    }
    prev = t;
  }
  // The rectangles' variable sets must union to the vector's own.
  std::set<VarId> unioned;
  for (const RectangularKempf& r : out)
    for (const VarId& v : kempf_vars(rectangle_vector(r, n), n, false)) unioned.insert(v);
  std::vector<VarId> direct = kempf_vars(a, n, false);
  if (unioned != std::set<VarId>(direct.begin(), direct.end()))
    throw std::logic_error("rectangular decomposition misses variables");
  return out;
}

std::vector<VarId> kempf_vars(const KempfVector& a, std::uint16_t n, bool doubled) {
  if (!is_kempf_vector(a, n)) throw std::invalid_argument("not a Kempf vector");
  std::vector<VarId> out;
  for (std::uint16_t j = 1; j <= n; ++j) {
    const std::uint16_t low = std::max<std::uint16_t>(j, n - a[j - 1]);
    for (std::uint16_t i = low + 1; i <= n; ++i) {
      out.push_back(algebra::var_x(i, j));
      if (doubled) out.push_back(algebra::var_y(i, j));
    }
  }
  return out;
}

bool check_kempf_compat(const SplittingOperator& op, std::uint16_t n, const KempfVector& a) {
  return compatibly_splits(op, IdealSpec::variables(op.ring(), kempf_vars(a, n, true)));
}

bool check_kempf_compat(std::uint16_t n, std::uint32_t p, const KempfVector& a) {
  SplittingOperator op(poly_pow(diag::f_section(n, p), p - 1));
  return check_kempf_compat(op, n, a);
}

namespace {

// Deterministic xorshift generator for the random-element sweep.
struct XorShift {
  std::uint64_t state;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

Polynomial random_element(XorShift& rng, const Ring& ring, std::uint64_t max_degree) {
  std::vector<Polynomial::Term> terms;
  const std::size_t nterms = 1 + rng.next() % 3;
  for (std::size_t t = 0; t < nterms; ++t) {
    Monomial m(ring.nvars());
    std::uint64_t degree_left = max_degree;
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
      const std::uint64_t e = rng.next() % (degree_left + 1) % 3;
      m.set_exp(k, static_cast<Monomial::Exp>(e));
      degree_left -= e;
    }
    terms.push_back({m, static_cast<std::uint32_t>(1 + rng.next() % (ring.p() - 1 + 1))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

bool monideal_intersection_identity(const std::vector<VarId>& m_vars, const Polynomial& f,
                                    const Polynomial& g, std::uint64_t seed) {
  const Ring& ring = f.ring();
  ring.require_compatible(g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("factors must be nonzero");
  // The lemma's hypothesis: f and g live away from the monomial variables.
  for (const VarId& v : m_vars) {
    const auto idx = ring.table().index_of(v);
    if (!idx) throw std::invalid_argument("monomial variable not in ring");
    for (const Polynomial* h : {&f, &g})
      for (const Polynomial::Term& t : h->terms())
        if (t.mon.exp(*idx) != 0)
          throw std::invalid_argument("factor meets the monomial variables");
  }

  auto with_principal = [&](const Polynomial& h) {
    if (m_vars.empty()) return IdealSpec::principal(h);
    return IdealSpec::sum({IdealSpec::variables(ring, m_vars), IdealSpec::principal(h)});
  };
  IdealSpec lhs = with_principal(f * g);
  IdealSpec in_f = with_principal(f);
  IdealSpec in_g = with_principal(g);

  auto intersection_matches = [&](const Polynomial& u) {
    return lhs.contains(u) == (in_f.contains(u) && in_g.contains(u));
  };

  // Generators of each side.
  for (const VarId& v : m_vars)
    if (!intersection_matches(Polynomial::variable(ring, v))) return false;
  if (!lhs.contains(f * g) || !in_f.contains(f * g) || !in_g.contains(f * g)) return false;

  // Full monomial sweep: odometer over exponent vectors of bounded degree.
  const std::uint64_t bound = 2 * (f.degree() + g.degree());
  std::vector<std::uint64_t> exp(ring.nvars(), 0);
  while (true) {
    Monomial m(ring.nvars());
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      m.set_exp(k, static_cast<Monomial::Exp>(exp[k]));
      total += exp[k];
    }
    if (!intersection_matches(Polynomial::monomial(ring, m, 1))) return false;
    // Advance to the next exponent vector of total degree <= bound.
    std::size_t k = 0;
    for (; k < exp.size(); ++k) {
      ++exp[k];
      ++total;
      if (total <= bound) break;
      total -= exp[k];
      exp[k] = 0;
    }
    if (k == exp.size()) break;
  }

  // Random elements designed to land in the intersection often.
  XorShift rng{seed * 0x9e3779b97f4a7c15ULL + 1};
  const std::uint64_t rdeg = f.degree() + g.degree();
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial r = random_element(rng, ring, rdeg);
    Polynomial candidates[] = {f * r, g * r, f * g * r + random_element(rng, ring, rdeg),
                               r};
    for (const Polynomial& u : candidates) {
      if (in_f.contains(u) && in_g.contains(u) && !lhs.contains(u)) return false;
      if (lhs.contains(u) && !(in_f.contains(u) && in_g.contains(u))) return false;
    }
  }
  return true;
}

std::vector<KempfVector> all_kempf_vectors(std::uint16_t n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<KempfVector> out;
  KempfVector a(n, 0);
  // Odometer over weakly decreasing vectors below the staircase bound.
  while (true) {
    out.push_back(a);
    std::size_t j = n - 1;  // a[n-1] stays 0
    while (j-- > 0) {
      const std::uint16_t ceiling =
          std::min<std::uint16_t>(static_cast<std::uint16_t>(n - (j + 1)),
                                  j == 0 ? static_cast<std::uint16_t>(n) : a[j - 1]);
      if (a[j] < ceiling) {
        ++a[j];
        for (std::size_t k = j + 1; k + 1 < n; ++k) a[k] = 0;
        break;
      }
      if (j == 0) return out;
    }
  }
}

std::string to_string(const KempfVector& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out;
}

}  // namespace fsplit::kempf
