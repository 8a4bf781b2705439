#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "paper_values.hpp"
#include "puregaps/charx.hpp"
#include "puregaps/counting.hpp"

using namespace puregaps;

namespace {
GapTuple fin(std::vector<Int> c) { return {std::move(c), false}; }
GapTuple inf(std::vector<Int> c) { return {std::move(c), true}; }

std::vector<std::vector<Int>> coords(const PureGapSet& s) {
  std::vector<std::vector<Int>> out;
  for (const auto& t : s.tuples) out.push_back(t.coords);
  return out;
}
}  // namespace

TEST_CASE("is_pure_gap_kummer") {
  CHECK(is_pure_gap_kummer(bezout_for(4, 7), fin({1, 1})));
  CHECK(is_pure_gap_kummer(bezout_for(3, 8), fin({1, 1, 1})));
  CHECK_FALSE(is_pure_gap_kummer(bezout_for(3, 8), fin({3, 1, 1})));
  CHECK_THROWS_AS(is_pure_gap_kummer(bezout_for(4, 7), fin({1})), Error);
  CHECK_THROWS_AS(is_pure_gap_kummer(bezout_for(3, 2), fin({1, 1, 1})), Error);
  CHECK_THROWS_AS(is_pure_gap_kummer(KummerShape{4, 7, 1, 1}, fin({1, 1})), Error);
}

TEST_CASE("is_pure_gap_kummer_inf") {
  CHECK(is_pure_gap_kummer_inf(KummerShape{3, 8, -1, 3}, inf({1, 1, 7})));
  CHECK(is_pure_gap_kummer_inf(KummerShape{4, 7, -1, 2}, inf({1, 1})));
  CHECK_FALSE(is_pure_gap_kummer_inf(KummerShape{3, 8, -1, 3}, inf({3, 1, 1})));
  CHECK_THROWS_AS(is_pure_gap_kummer_inf(KummerShape{3, 8, -1, 3}, fin({1, 1})), Error);
}

TEST_CASE("is_pure_gap_quotient") {
  const auto c74 = make_curve(7, 4);
  const auto c83 = make_curve(8, 3);
  CHECK(is_pure_gap_quotient(c74, fin({1, 1})));
  CHECK(is_pure_gap_quotient(c83, fin({7, 1, 1})));
  CHECK_FALSE(is_pure_gap_quotient(c83, fin({1, 1, 8})));
  CHECK_THROWS_AS(is_pure_gap_quotient(c74, fin({1, 1, 1, 1, 1, 1, 1, 1})), Error);

  SUBCASE("agrees with the Kummer test at r = q") {
    for (int trial = 0; trial < 2000; ++trial) {
      const auto t = fin({oracle::uniform(1, 17), oracle::uniform(1, 17), oracle::uniform(1, 17)});
      CHECK(is_pure_gap_quotient(c74, t) == is_pure_gap_kummer(kummer_shape(c74), t));
    }
  }
}

TEST_CASE("decompose") {
  CHECK(decompose(7, 4) == Decomposition{1, 3});
  CHECK(decompose(8, 4) == Decomposition{1, 4});
  CHECK(decompose(1, 3) == Decomposition{0, 1});
  for (Int t = 1; t < 200; ++t) {
    for (Int m = 2; m < 12; ++m) {
      const auto d = decompose(t, m);
      CHECK(t == m * d.i + d.j);
      CHECK(d.i >= 0);
      CHECK((d.j >= 1 && d.j <= m));
    }
  }
}

TEST_CASE("enumerate_pure_gaps reproduces the worked examples") {
  const auto c83 = make_curve(8, 3);
  const auto set = enumerate_pure_gaps(c83, 3, false);
  CHECK(set.bound == 13);
  CHECK(coords(set) == reference::kTriples_8_3);

  CHECK(enumerate_pure_gaps(make_curve(7, 4), 2, false).size() == 29);
  CHECK(enumerate_pure_gaps(make_curve(7, 4), 6, false).size() == 0);
  CHECK_THROWS_AS(enumerate_pure_gaps(make_curve(7, 4), 1, false), Error);
}

TEST_CASE("enumeration limit raises Overflow") {
  EnumerationOptions opts;
  opts.max_points = 100;
  try {
    enumerate_pure_gaps(make_curve(7, 4), 2, false, opts);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("parallel enumeration matches a single worker") {
  for (auto [q, m, n] : {std::tuple{7, 4, 3}, std::tuple{8, 9, 2}, std::tuple{9, 5, 3}}) {
    const auto c = make_curve(q, m);
    EnumerationOptions one;
    one.threads = 1;
    EnumerationOptions many;
    many.threads = 7;
    CHECK(coords(enumerate_pure_gaps(c, n, false, one)) == coords(enumerate_pure_gaps(c, n, false, many)));
  }
}

TEST_CASE("properties over the small sweep") {
  for (Int q : prime_powers(2, 9)) {
    for (Int m : quotient_degrees(q)) {
      const auto c = make_curve(q, m);
      const auto single = gap_set_single(c);
      for (Int n = 2; n <= std::min<Int>(3, q - c.N); ++n) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        const auto f = enumerate_pure_gaps(c, n, false);
        const auto i = enumerate_pure_gaps(c, n, true);
        CHECK(coords(f) == coords(i));
        CHECK(static_cast<Int>(f.size()) == count_pure_gaps_quotient(c, n).total);
        for (const auto& t : f.tuples) {
          CHECK(std::is_sorted(f.tuples.begin(), f.tuples.end()));
          for (Int x : t.coords) {
            CHECK(x % m != 0);
            CHECK(std::binary_search(single.begin(), single.end(), x));
          }
          // Every permutation of a pure gap is a pure gap.
          auto p = t.coords;
          std::sort(p.begin(), p.end());
          do {
            CHECK(is_pure_gap_quotient(c, fin(p)));
          } while (std::next_permutation(p.begin(), p.end()));
        }
      }
    }
  }
}

TEST_CASE("Hermitian specialisation agrees on the search box") {
  for (Int q : {3, 4, 5}) {
    const auto c = hermitian(q);
    const Int bound = 2 * c.genus - 1;
    for (Int a = 1; a <= bound; ++a)
      for (Int b = 1; b <= bound; ++b)
        CHECK(is_pure_gap_quotient(c, fin({a, b})) == is_pure_gap_hermitian(q, fin({a, b})));
  }
}

TEST_CASE("count_in_box") {
  const auto bc = count_in_box(make_curve(7, 4), 20, 20);
  CHECK(bc == BoxCount{29, 338, 441});
  CHECK(bc.gaps() == 103);
  CHECK(count_in_box(make_curve(8, 3), 0, 0) == BoxCount{0, 1, 1});
  CHECK(count_in_box(make_curve(8, 3), 20, 20).pure == 17);
}
