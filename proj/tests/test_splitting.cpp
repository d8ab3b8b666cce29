#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fsplit/polynomial.hpp"
#include "fsplit/splitting.hpp"
#include "fsplit/text_io.hpp"
#include "oracles.hpp"

using namespace fsplit::algebra;
using namespace fsplit::splitting;

namespace {

Ring chart_ring3(std::uint32_t p) {
  return Ring(Characteristic(p),
              make_table({var_x(3, 1), var_x(2, 1), var_y(3, 1), var_y(2, 1),
                          var_x(3, 2), var_y(3, 2)}));
}

Polynomial vp(const Ring& r, const VarId& v) { return Polynomial::variable(r, v); }

// The rank-3 diagonal section assembled from its four determinant factors.
Polynomial f3_section(const Ring& r) {
  Polynomial det2 = vp(r, var_x(2, 1)) * vp(r, var_y(3, 1)) -
                    vp(r, var_x(3, 1)) * vp(r, var_y(2, 1));
  Polynomial det3 = vp(r, var_y(2, 1)) * vp(r, var_x(3, 2)) - vp(r, var_y(3, 1)) -
                    vp(r, var_x(2, 1)) * vp(r, var_x(3, 2)) + vp(r, var_x(3, 1));
  Polynomial det4 = vp(r, var_y(3, 2)) - vp(r, var_x(3, 2));
  return vp(r, var_x(3, 1)) * det2 * det3 * det4;
}

Polynomial det_l2(const Ring& r) {
  return vp(r, var_x(2, 1)) * vp(r, var_y(3, 1)) -
         vp(r, var_x(3, 1)) * vp(r, var_y(2, 1));
}

// Two-pair ring and pairing used by the randomized diagonal suites.
Ring pair_ring2(std::uint32_t p) {
  return Ring(Characteristic(p),
              make_table({var_x(2, 1), var_y(2, 1), var_x(3, 1), var_y(3, 1)}));
}

Pairing pairing2() {
  return {DiagonalPair{var_x(2, 1), var_y(2, 1), var_z(2, 1)},
          DiagonalPair{var_x(3, 1), var_y(3, 1), var_z(3, 1)}};
}

// Per pair, a product of two distinct linear factors drawn from
// {x, y, y - x}; every such product of chart-degree two splits, and the
// section is maximally split iff every pair includes the difference factor.
Polynomial random_pair_section(std::mt19937_64& rng, const Ring& r, const Pairing& pairing,
                               bool* all_diagonal) {
  std::uniform_int_distribution<int> combo(0, 2);
  Polynomial s = Polynomial::constant(r, 1);
  *all_diagonal = true;
  for (const DiagonalPair& pr : pairing) {
    Polynomial x = vp(r, pr.x), y = vp(r, pr.y);
    switch (combo(rng)) {
      case 0:
        s = s * (x * y);
        *all_diagonal = false;
        break;
      case 1:
        s = s * (x * (y - x));
        break;
      default:
        s = s * (y * (y - x));
        break;
    }
  }
  return poly_pow(s, r.p() - 1);
}

}  // namespace

TEST_CASE("duality operator on the textbook examples") {
  {
    Ring r = oracles::generic_ring(2, 1);
    SplittingOperator op(vp(r, var_v(1)));
    CHECK(op.apply(Polynomial::constant(r, 1)) == Polynomial::constant(r, 1));
    CHECK(op.is_splitting());
  }
  {
    Ring r = oracles::generic_ring(3, 1);
    SplittingOperator op(poly_pow(vp(r, var_v(1)), 2));
    CHECK(op.apply(poly_pow(vp(r, var_v(1)), 3)) == vp(r, var_v(1)));
    CHECK(op.apply(vp(r, var_v(1))).is_zero());
  }
  {
    Ring r = oracles::generic_ring(3, 1);
    CHECK_FALSE(SplittingOperator(poly_pow(vp(r, var_v(1)), 3)).is_splitting());
  }
  CHECK_THROWS_AS(SplittingOperator(Polynomial::zero(oracles::generic_ring(2, 1))),
                  std::invalid_argument);
}

TEST_CASE("p-linearity of the operator") {
  std::mt19937_64 rng(1101);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = oracles::generic_ring(p, 3);
    for (int trial = 0; trial < 60; ++trial) {
      Polynomial s = oracles::random_poly(rng, r, 5, 4);
      if (s.is_zero()) continue;
      SplittingOperator op(s);
      Polynomial h = oracles::random_poly(rng, r, 4, 2);
      Polynomial g = oracles::random_poly(rng, r, 4, 3);
      CHECK(op.apply(poly_pow(h, p) * g) == h * op.apply(g));
    }
  }
}

TEST_CASE("application is deterministic and context-checked") {
  Ring r = chart_ring3(2);
  SplittingOperator op(f3_section(r));
  Polynomial one = Polynomial::constant(r, 1);
  CHECK(op.apply(one) == op.apply(one));
  Ring other = oracles::generic_ring(2, 2);
  CHECK_THROWS_AS(op.apply(Polynomial::constant(other, 1)), std::invalid_argument);
}

TEST_CASE("standard and diagonal-section splittings") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = chart_ring3(p);
    CHECK(SplittingOperator(standard_section(r)).is_splitting());
    CHECK(SplittingOperator(poly_pow(f3_section(r), p - 1)).is_splitting());
  }
}

TEST_CASE("normalization rescales constant images") {
  Ring r = oracles::generic_ring(5, 1);
  SplittingOperator op(standard_section(r).scaled(2));
  Polynomial img = op.apply(Polynomial::constant(r, 1));
  CHECK(img == Polynomial::constant(r, 2));
  CHECK_FALSE(op.is_splitting());
  std::uint32_t rescale = 0;
  SplittingOperator fixed = op.normalized(&rescale);
  CHECK(rescale == 2);
  CHECK(fixed.is_splitting());
  // Already-normalized operators are returned unchanged.
  SplittingOperator again = fixed.normalized(&rescale);
  CHECK(rescale == 1);
  CHECK(again.section() == fixed.section());
}

TEST_CASE("per-term variables criterion agrees with residue enumeration") {
  std::mt19937_64 rng(2202);
  std::uniform_int_distribution<int> pick(0, 1);

  auto compare_all_subsets = [&](const SplittingOperator& op) {
    const std::size_t n = op.ring().nvars();
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<VarId> subset;
      std::vector<std::size_t> subset_idx;
      for (std::size_t k = 0; k < n; ++k) {
        if (pick(rng)) {
          subset.push_back(op.ring().table().at(k));
          subset_idx.push_back(k);
        }
      }
      if (subset.empty()) continue;
      IdealSpec ideal = IdealSpec::variables(op.ring(), subset);
      CHECK(compatibly_splits(op, ideal) ==
            oracles::compat_vars_bruteforce(op, subset_idx));
    }
  };

  for (std::uint32_t p : {2u, 3u}) {
    Ring g4 = oracles::generic_ring(p, 4);
    compare_all_subsets(SplittingOperator(standard_section(g4)));

    Ring r = chart_ring3(p);
    compare_all_subsets(SplittingOperator(poly_pow(f3_section(r), p - 1)));

    Ring two = pair_ring2(p);
    for (int trial = 0; trial < 5; ++trial) {
      bool unused = false;
      SplittingOperator op(random_pair_section(rng, two, pairing2(), &unused));
      REQUIRE(op.is_splitting());
      compare_all_subsets(op);
    }
  }
}

TEST_CASE("compatibility of the rank-3 section with its named ideals") {
  Ring r = chart_ring3(2);
  SplittingOperator op(f3_section(r));
  REQUIRE(op.is_splitting());
  CHECK(compatibly_splits(op, IdealSpec::variables(r, {var_x(3, 1), var_y(3, 1)})));
  CHECK(compatibly_splits(
      op, IdealSpec::variables(r, {var_x(3, 1), var_y(3, 1), var_x(2, 1), var_y(2, 1)})));
  CompatResult pr = compatibly_splits_detail(op, IdealSpec::principal(det_l2(r)));
  CHECK(pr.passed);
  CHECK(pr.exact);
  // The whole section generates a compatibly split principal ideal as well.
  CHECK(compatibly_splits(op, IdealSpec::principal(f3_section(r))));
}

TEST_CASE("compatibility requires a splitting") {
  Ring r = oracles::generic_ring(2, 1);
  SplittingOperator op(poly_pow(vp(r, var_v(1)), 2));
  REQUIRE_FALSE(op.is_splitting());
  CHECK_THROWS_AS(compatibly_splits(op, IdealSpec::variables(r, {var_v(1)})),
                  std::invalid_argument);
}

TEST_CASE("sum and intersection closure of compatibly split variable ideals") {
  std::mt19937_64 rng(3303);
  std::uniform_int_distribution<int> pick(0, 1);
  Ring r = chart_ring3(2);
  for (const Polynomial& section : {standard_section(r), f3_section(r)}) {
    SplittingOperator op(section);
    REQUIRE(op.is_splitting());
    int closures_checked = 0;
    for (int trial = 0; trial < 40 && closures_checked < 12; ++trial) {
      std::vector<VarId> sa, sb;
      std::vector<std::size_t> ia, ib;
      for (std::size_t k = 0; k < r.nvars(); ++k) {
        if (pick(rng)) {
          sa.push_back(r.table().at(k));
          ia.push_back(k);
        }
        if (pick(rng)) {
          sb.push_back(r.table().at(k));
          ib.push_back(k);
        }
      }
      if (sa.empty() || sb.empty()) continue;
      IdealSpec a = IdealSpec::variables(r, sa);
      IdealSpec b = IdealSpec::variables(r, sb);
      if (!compatibly_splits(op, a) || !compatibly_splits(op, b)) continue;
      ++closures_checked;
      // Sum: still a variable ideal after merging.
      IdealSpec both = IdealSpec::sum({a, b});
      CHECK(both.kind() == IdealSpec::Kind::Variables);
      CHECK(compatibly_splits(op, both));
      // Intersection: generated by pairwise least common multiples.
      std::vector<Monomial> gens;
      for (std::size_t x : ia) {
        for (std::size_t y : ib) {
          Monomial m(r.nvars());
          m.set_exp(x, 1);
          m.set_exp(y, std::max<Monomial::Exp>(m.exp(y), 1));
          gens.push_back(std::move(m));
        }
      }
      CHECK(oracles::compat_monomial_ideal_bruteforce(op, gens));
    }
    CHECK(closures_checked > 0);
  }
}

TEST_CASE("vanishing order along the diagonal") {
  Ring r = chart_ring3(5);
  Pairing pairing = chart_pairing(3);
  CHECK(vanishing_order_on_diagonal(f3_section(r), pairing) == 3);
  CHECK(vanishing_order_on_diagonal(det_l2(r), pairing) == 1);
  CHECK(vanishing_order_on_diagonal(Polynomial::constant(r, 1), pairing) == 0);
  CHECK(vanishing_order_on_diagonal(Polynomial::zero(r), pairing) == kInfiniteDegree);
}

TEST_CASE("ideal membership per variant") {
  Ring r = chart_ring3(2);
  Pairing pairing = chart_pairing(3);
  Polynomial det3 = vp(r, var_y(2, 1)) * vp(r, var_x(3, 2)) - vp(r, var_y(3, 1)) -
                    vp(r, var_x(2, 1)) * vp(r, var_x(3, 2)) + vp(r, var_x(3, 1));

  SUBCASE("variables") {
    IdealSpec ideal = IdealSpec::variables(r, {var_x(2, 1)});
    CHECK(ideal.contains(vp(r, var_x(2, 1)) * vp(r, var_y(3, 1))));
    CHECK_FALSE(ideal.contains(Polynomial::constant(r, 1)));
    CHECK(ideal.contains(Polynomial::zero(r)));
    IdealSpec zero_ideal = IdealSpec::variables(r, {});
    CHECK(zero_ideal.contains(Polynomial::zero(r)));
    CHECK_FALSE(zero_ideal.contains(vp(r, var_x(2, 1))));
  }

  SUBCASE("principal") {
    IdealSpec ideal = IdealSpec::principal(det_l2(r));
    CHECK(ideal.contains(det_l2(r) * vp(r, var_x(3, 1))));
    CHECK_FALSE(ideal.contains(vp(r, var_x(3, 1)) + Polynomial::constant(r, 1)));
    CHECK_THROWS_AS(IdealSpec::principal(Polynomial::zero(r)), std::invalid_argument);
  }

  SUBCASE("diagonal powers") {
    CHECK(IdealSpec::diagonal_power(r, pairing, 1).contains(det_l2(r)));
    CHECK_FALSE(IdealSpec::diagonal_power(r, pairing, 2).contains(det_l2(r)));
    CHECK(IdealSpec::diagonal_power(r, pairing, 3).contains(f3_section(r)));
    CHECK_FALSE(IdealSpec::diagonal_power(r, pairing, 4).contains(f3_section(r)));
    CHECK_THROWS_AS(IdealSpec::diagonal_power(r, pairing, 0), std::invalid_argument);
  }

  SUBCASE("pair-closed sums with a diagonal part") {
    IdealSpec ideal = IdealSpec::sum(
        {IdealSpec::variables(r, {var_x(3, 1), var_y(3, 1)}),
         IdealSpec::diagonal_power(r, pairing, 1)});
    CHECK(ideal.kind() == IdealSpec::Kind::Sum);
    CHECK(ideal.contains(det3));
    IdealSpec stricter = IdealSpec::sum(
        {IdealSpec::variables(r, {var_x(3, 1), var_y(3, 1)}),
         IdealSpec::diagonal_power(r, pairing, 2)});
    CHECK_FALSE(stricter.contains(det3));
  }

  SUBCASE("sums with a principal part reduce variables first") {
    IdealSpec ideal = IdealSpec::sum({IdealSpec::variables(r, {var_x(3, 1), var_y(3, 1)}),
                                      IdealSpec::principal(det_l2(r))});
    CHECK(ideal.contains(vp(r, var_x(3, 1)) + det_l2(r)));
    CHECK_FALSE(ideal.contains(vp(r, var_x(2, 1)) * vp(r, var_y(2, 1))));
  }

  SUBCASE("rejected combinations") {
    CHECK_THROWS_AS(IdealSpec::sum({IdealSpec::principal(det_l2(r)),
                                    IdealSpec::principal(vp(r, var_x(3, 1)))}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IdealSpec::sum({IdealSpec::principal(det_l2(r)),
                                    IdealSpec::diagonal_power(r, pairing, 1)}),
                    std::invalid_argument);
    // x31 without its partner y31 breaks pair closure.
    CHECK_THROWS_AS(IdealSpec::sum({IdealSpec::variables(r, {var_x(3, 1)}),
                                    IdealSpec::diagonal_power(r, pairing, 1)}),
                    std::invalid_argument);
  }
}

TEST_CASE("maximal splitting along the diagonal: order criterion") {
  {
    Ring r = chart_ring3(2);
    SplittingOperator op(f3_section(r));
    CHECK(is_maximally_split_diagonal(op, chart_pairing(3), 3));
  }
  for (std::uint32_t p : {2u, 3u}) {
    Ring r(Characteristic(p), make_table({var_x(2, 1), var_y(2, 1)}));
    Pairing pairing{DiagonalPair{var_x(2, 1), var_y(2, 1), var_z(2, 1)}};
    SplittingOperator std_op(standard_section(r));
    CHECK_FALSE(is_maximally_split_diagonal(std_op, pairing, 1));
    CHECK(is_maximally_split_diagonal(std_op, {}, 0));

    Polynomial f2 = vp(r, var_x(2, 1)) * (vp(r, var_y(2, 1)) - vp(r, var_x(2, 1)));
    SplittingOperator diag_op(poly_pow(f2, p - 1));
    REQUIRE(diag_op.is_splitting());
    CHECK(is_maximally_split_diagonal(diag_op, pairing, 1));
    // A claimed codimension below the section's actual diagonal order is
    // impossible for a splitting and must be a hard error.
    CHECK_THROWS_AS(is_maximally_split_diagonal(diag_op, pairing, 0), std::domain_error);
  }
}

TEST_CASE("maximal splitting along the diagonal: bounded operator check") {
  for (std::uint32_t p : {2u, 3u}) {
    Ring r(Characteristic(p), make_table({var_x(2, 1), var_y(2, 1)}));
    Pairing pairing{DiagonalPair{var_x(2, 1), var_y(2, 1), var_z(2, 1)}};
    Polynomial f2 = vp(r, var_x(2, 1)) * (vp(r, var_y(2, 1)) - vp(r, var_x(2, 1)));
    CHECK(maximality_operator_check(SplittingOperator(poly_pow(f2, p - 1)), pairing, 1));
    CompatResult bad = maximality_operator_check_detail(
        SplittingOperator(standard_section(r)), pairing, 1);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.witness.empty());
  }
  // m_max = 0 amounts to plain compatibility of the diagonal ideal.
  Ring r = chart_ring3(2);
  SplittingOperator op(f3_section(r));
  CHECK(maximality_operator_check(op, chart_pairing(3), 0));
  CHECK(compatibly_splits(op, IdealSpec::diagonal_power(r, chart_pairing(3), 1)));
}

TEST_CASE("order criterion and operator check agree on random sections") {
  std::mt19937_64 rng(4404);
  for (std::uint32_t p : {2u, 3u}) {
    Ring r = pair_ring2(p);
    Pairing pairing = pairing2();
    for (int trial = 0; trial < 10; ++trial) {
      bool all_diagonal = false;
      SplittingOperator op(random_pair_section(rng, r, pairing, &all_diagonal));
      REQUIRE(op.is_splitting());
      const bool by_order = is_maximally_split_diagonal(op, pairing, 2);
      const bool by_operator = maximality_operator_check(op, pairing, 2, 4 * p);
      CHECK(by_order == all_diagonal);
      CHECK(by_order == by_operator);
    }
  }
}

TEST_CASE("shift plumbing rejects malformed pairings") {
  Ring r = chart_ring3(2);
  Pairing bad_missing{DiagonalPair{var_x(4, 1), var_y(4, 1), var_z(4, 1)}};
  CHECK_THROWS_AS(shifted_ring(r, bad_missing), std::invalid_argument);
  Ring with_z(Characteristic(2), make_table({var_x(2, 1), var_y(2, 1), var_z(2, 1)}));
  Pairing dup{DiagonalPair{var_x(2, 1), var_y(2, 1), var_z(2, 1)}};
  CHECK_THROWS_AS(shifted_ring(with_z, dup), std::invalid_argument);
  CHECK_THROWS_AS(chart_pairing(1), std::invalid_argument);
}
