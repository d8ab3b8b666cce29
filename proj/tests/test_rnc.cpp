#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fsplit/rnc.hpp"
#include "fsplit/splitting.hpp"
#include "oracles.hpp"

using namespace fsplit::algebra;
using namespace fsplit::rnc;

namespace {

Polynomial vp(const Ring& r, const VarId& v) { return Polynomial::variable(r, v); }

// x·(z·y − x²)·(w − y) with x=v1, y=v2, z=v3, w=v4.
Polynomial textbook_example(const Ring& r) {
  return vp(r, var_v(1)) * (vp(r, var_v(3)) * vp(r, var_v(2)) - poly_pow(vp(r, var_v(1)), 2)) *
         (vp(r, var_v(4)) - vp(r, var_v(2)));
}

Ring chart_ring3(std::uint32_t p) {
  return Ring(Characteristic(p),
              make_table({var_x(3, 1), var_x(2, 1), var_y(3, 1), var_y(2, 1),
                          var_x(3, 2), var_y(3, 2)}));
}

Polynomial f3_section(const Ring& r) {
  Polynomial det2 = vp(r, var_x(2, 1)) * vp(r, var_y(3, 1)) -
                    vp(r, var_x(3, 1)) * vp(r, var_y(2, 1));
  Polynomial det3 = vp(r, var_y(2, 1)) * vp(r, var_x(3, 2)) - vp(r, var_y(3, 1)) -
                    vp(r, var_x(2, 1)) * vp(r, var_x(3, 2)) + vp(r, var_x(3, 1));
  Polynomial det4 = vp(r, var_y(3, 2)) - vp(r, var_x(3, 2));
  return vp(r, var_x(3, 1)) * det2 * det3 * det4;
}

std::vector<std::size_t> slots_of(const Ring& r, const OrderedVars& order) {
  std::vector<std::size_t> s;
  for (const VarId& v : order) s.push_back(*r.table().index_of(v));
  return s;
}

}  // namespace

TEST_CASE("four-variable example is order sensitive") {
  Ring r = oracles::generic_ring(5, 4);
  Polynomial f = textbook_example(r);
  OrderedVars base{var_v(1), var_v(2), var_v(3), var_v(4)};

  CHECK(has_rnc(f, {var_v(1), var_v(2), var_v(3), var_v(4)}));
  CHECK_FALSE(has_rnc(f, {var_v(1), var_v(4), var_v(3), var_v(2)}));

  // Exactly three of the 24 orders admit the recursion; the oracle must agree
  // everywhere.
  std::vector<OrderedVars> admitted;
  std::sort(base.begin(), base.end());
  do {
    const bool lib = has_rnc(f, base);
    CHECK(lib == oracles::has_rnc_bruteforce(f, slots_of(r, base)));
    if (lib) admitted.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  REQUIRE(admitted.size() == 3);
  CHECK(admitted[0] == OrderedVars{var_v(1), var_v(2), var_v(3), var_v(4)});
  CHECK(admitted[1] == OrderedVars{var_v(1), var_v(2), var_v(4), var_v(3)});
  CHECK(admitted[2] == OrderedVars{var_v(1), var_v(3), var_v(2), var_v(4)});
}

TEST_CASE("unipotent-chart anticanonical section") {
  Ring r(Characteristic(5), make_table({var_x(3, 1), var_x(2, 1), var_x(3, 2)}));
  Polynomial f =
      vp(r, var_x(3, 1)) * (vp(r, var_x(2, 1)) * vp(r, var_x(3, 2)) - vp(r, var_x(3, 1)));
  CHECK(has_rnc(f, {var_x(3, 1), var_x(2, 1), var_x(3, 2)}));
  CHECK_FALSE(has_rnc(f, {var_x(2, 1), var_x(3, 1), var_x(3, 2)}));
}

TEST_CASE("diagonal section of rank three under the chart ordering") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = chart_ring3(p);
    Polynomial f = f3_section(r);
    OrderedVars v_order = r.table().vars();
    CHECK(has_rnc(f, v_order));
    auto minimal = rnc_minimal_monomial(f, v_order);
    REQUIRE(minimal.has_value());
    Monomial all_six(r.nvars());
    for (std::size_t k = 0; k < r.nvars(); ++k) all_six.set_exp(k, 1);
    CHECK(*minimal == all_six);
  }
}

TEST_CASE("degenerate inputs") {
  Ring r = oracles::generic_ring(3, 2);
  CHECK_FALSE(has_rnc(Polynomial::zero(r), {var_v(1)}));
  CHECK(has_rnc(Polynomial::constant(r, 2), {}));
  CHECK(has_rnc(vp(r, var_v(1)), {var_v(1)}));
  auto m = rnc_minimal_monomial(vp(r, var_v(1)), {var_v(1)});
  REQUIRE(m.has_value());
  CHECK(m->exp(0) == 1);
  CHECK(m->exp(1) == 0);
  CHECK_FALSE(rnc_minimal_monomial(vp(r, var_v(1)) + Polynomial::constant(r, 1), {var_v(1)})
                  .has_value());
  CHECK_FALSE(rnc_minimal_monomial(Polynomial::zero(r), {var_v(1)}).has_value());
}

TEST_CASE("argument validation") {
  Ring r = oracles::generic_ring(3, 2);
  Polynomial f = vp(r, var_v(1)) * vp(r, var_v(2));
  CHECK_THROWS_AS(has_rnc(f, {var_v(1)}), std::invalid_argument);
  CHECK_THROWS_AS(has_rnc(f, {var_v(1), var_v(1), var_v(2)}), std::invalid_argument);
  CHECK_THROWS_AS(has_rnc(f, {var_v(1), var_v(2), var_v(5)}), std::invalid_argument);
  // Extra ring variables in the order are accepted input, but the recursion
  // then honestly fails (the residue becomes constant before they divide it).
  Ring wide = oracles::generic_ring(3, 3);
  CHECK_FALSE(has_rnc(vp(wide, var_v(1)), {var_v(1), var_v(2), var_v(3)}));
  CHECK(has_rnc(vp(wide, var_v(1)) * vp(wide, var_v(2)) * vp(wide, var_v(3)),
                {var_v(1), var_v(2), var_v(3)}));
}

TEST_CASE("agreement with the literal recursion on random inputs") {
  std::mt19937_64 rng(5505);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = oracles::generic_ring(p, 4);
    OrderedVars order = r.table().vars();
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = oracles::random_poly(rng, r, 6, 4);
      OrderedVars shuffled = order;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(has_rnc(f, shuffled) == oracles::has_rnc_bruteforce(f, slots_of(r, shuffled)));
    }
    int positives = 0;
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial f = oracles::random_staircase(rng, r, order);
      CHECK(has_rnc(f, order));
      CHECK(oracles::has_rnc_bruteforce(f, slots_of(r, order)));
      OrderedVars shuffled = order;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const bool lib = has_rnc(f, shuffled);
      positives += lib;
      CHECK(lib == oracles::has_rnc_bruteforce(f, slots_of(r, shuffled)));
    }
    CHECK(positives >= 0);  // shuffled staircases may or may not survive
  }
}

TEST_CASE("residual normal crossings yield splittings after normalization") {
  std::mt19937_64 rng(6606);
  using fsplit::splitting::SplittingOperator;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = oracles::generic_ring(p, 3);
    OrderedVars order = r.table().vars();
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = oracles::random_staircase(rng, r, order);
      REQUIRE(has_rnc(f, order));
      SplittingOperator op(poly_pow(f, p - 1));
      CHECK(op.normalized().is_splitting());
    }
    Ring chart = chart_ring3(p);
    SplittingOperator diag(poly_pow(f3_section(chart), p - 1));
    CHECK(diag.normalized().is_splitting());
  }
}
