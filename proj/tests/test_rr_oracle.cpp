#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "paper_values.hpp"
#include "puregaps/charx.hpp"
#include "puregaps/counting.hpp"
#include "puregaps/rr_oracle.hpp"

using namespace puregaps;

namespace {
const PlaceId P1 = PlaceId::finite(1);
const PlaceId P2 = PlaceId::finite(2);
const PlaceId P3 = PlaceId::finite(3);
const PlaceId Pinf = PlaceId::infinity();

Divisor single(PlaceId p, Int c) {
  Divisor d;
  d.add(p, c);
  return d;
}

std::vector<std::vector<Int>> coords(const PureGapSet& s) {
  std::vector<std::vector<Int>> out;
  for (const auto& t : s.tuples) out.push_back(t.coords);
  return out;
}
}  // namespace

TEST_CASE("ramification data") {
  const auto c = make_curve(7, 4);
  const auto r = RamificationData::of(c);
  CHECK(r.div_y.degree() == 0);
  CHECK(r.e == 4);
  CHECK(c.m * r.v_inf_y == c.q * r.v_inf_x);
}

TEST_CASE("ell examples") {
  const auto c = make_curve(7, 4);
  CHECK(ell(c, Divisor{}) == 1);
  CHECK(ell(c, single(Pinf, 17)) == 9);
  CHECK(ell(c, single(P1, 1)) == 1);
  CHECK(ell(c, single(P1, 4)) == 2);  // 1/(x - alpha_1)
  CHECK_THROWS_AS(ell(c, single(PlaceId::finite(8), 1)), Error);
}

TEST_CASE("Riemann-Roch sanity on random divisors") {
  for (Int q : prime_powers(2, 9)) {
    for (Int m : quotient_degrees(q)) {
      const auto c = make_curve(q, m);
      const Int g = c.genus;
      for (int trial = 0; trial < 300; ++trial) {
        Divisor d;
        const int support = static_cast<int>(oracle::uniform(0, std::min<Int>(q, 4)));
        for (int k = 0; k < support; ++k) d.add(PlaceId::finite(oracle::uniform(1, q)), oracle::uniform(-2 * g, 2 * g));
        d.infinity_coeff = oracle::uniform(-2 * g, 2 * g);
        const Int l = ell(c, d);
        const Int deg = d.degree();
        if (deg < 0) CHECK(l == 0);
        if (deg > 2 * g - 2) CHECK(l == deg + 1 - g);
        CHECK(l >= 0);
        for (PlaceId p : {P1, Pinf}) {
          const Int step = ell(c, d + single(p, 1)) - l;
          CHECK(step >= 0);
          CHECK(step <= 1);
        }
      }
    }
  }
}

TEST_CASE("is_pure_gap_oracle") {
  const auto c83 = make_curve(8, 3);
  const std::vector<PlaceId> three{P1, P2, P3};
  CHECK(is_pure_gap_oracle(c83, three, GapTuple{{1, 1, 1}, false}));
  CHECK_FALSE(is_pure_gap_oracle(c83, three, GapTuple{{3, 1, 1}, false}));
  const std::vector<PlaceId> two{P1, P2};
  CHECK(is_pure_gap_oracle(make_curve(7, 4), two, GapTuple{{1, 1}, false}));
  CHECK_THROWS_AS(is_pure_gap_oracle(c83, two, GapTuple{{1, 1, 1}, false}), Error);
  const std::vector<PlaceId> dup{P1, P1};
  CHECK_THROWS_AS(is_pure_gap_oracle(c83, dup, GapTuple{{1, 1}, false}), Error);
  const std::vector<PlaceId> inf_first{Pinf, P1};
  CHECK_THROWS_AS(is_pure_gap_oracle(c83, inf_first, GapTuple{{1, 1}, true}), Error);
}

TEST_CASE("is_semigroup_member") {
  const auto c = make_curve(7, 4);
  const std::vector<PlaceId> two{P1, P2};
  CHECK(is_semigroup_member(c, two, std::vector<Int>{0, 0}));
  CHECK(is_semigroup_member(c, two, std::vector<Int>{4, 0}));
  CHECK_FALSE(is_semigroup_member(c, two, std::vector<Int>{1, 1}));
  CHECK_THROWS_AS(is_semigroup_member(c, two, std::vector<Int>{-1, 0}), Error);
}

TEST_CASE("gap/semigroup complementarity on the box") {
  for (auto [q, m] : {std::pair{7, 4}, std::pair{8, 3}, std::pair{5, 6}}) {
    const auto c = make_curve(q, m);
    const std::vector<PlaceId> two{P1, P2};
    const auto single_gaps = gap_set_single(c);
    for (Int a = 0; a <= 2 * c.genus; ++a) {
      for (Int b = 0; b <= 2 * c.genus; ++b) {
        const bool member = is_semigroup_member(c, two, std::vector<Int>{a, b});
        if (a >= 1 && b >= 1 && is_pure_gap_quotient(c, GapTuple{{a, b}, false})) CHECK_FALSE(member);
        // On an axis the pair semigroup restricts to the single-place one.
        if (b == 0 && a >= 1)
          CHECK(member == !std::binary_search(single_gaps.begin(), single_gaps.end(), a));
      }
    }
  }
}

TEST_CASE("brute_force_pure_gaps") {
  const auto c83 = make_curve(8, 3);
  const std::vector<PlaceId> three{P1, P2, P3};
  CHECK(coords(brute_force_pure_gaps(c83, three)) == reference::kTriples_8_3);

  const auto c74 = make_curve(7, 4);
  const std::vector<PlaceId> p12{P1, P2};
  const std::vector<PlaceId> p1inf{P1, Pinf};
  const auto a = brute_force_pure_gaps(c74, p12);
  const auto b = brute_force_pure_gaps(c74, p1inf);
  CHECK(a.size() == 29);
  CHECK(coords(a) == coords(b));
  CHECK(b.includes_infinity);

  SUBCASE("any choice of finite places gives the same set") {
    const std::vector<PlaceId> other{PlaceId::finite(5), PlaceId::finite(2), PlaceId::finite(8)};
    CHECK(coords(brute_force_pure_gaps(c83, other)) == reference::kTriples_8_3);
  }

  SUBCASE("work limit") {
    OracleOptions opts;
    opts.work_limit = 1000;
    try {
      brute_force_pure_gaps(c83, three, opts);
      FAIL("expected BoxTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoxTooLarge);
    }
  }
}

TEST_CASE("gap_set_oracle") {
  CHECK(gap_set_oracle(make_curve(7, 4), P1) == reference::kGaps_7_4);
  CHECK(gap_set_oracle(make_curve(7, 4), Pinf).size() == 9);
  CHECK(gap_set_oracle(hermitian(4), Pinf) == reference::kGapsHermitian4);
  for (Int q : prime_powers(2, 9)) {
    for (Int m : quotient_degrees(q)) {
      const auto c = make_curve(q, m);
      CHECK(gap_set_oracle(c, P1) == gap_set_single(c));
      CHECK(gap_set_oracle(c, Pinf) == gap_set_infinity(c));
      CHECK(static_cast<Int>(gap_set_oracle(c, Pinf).size()) == c.genus);
    }
  }
}
