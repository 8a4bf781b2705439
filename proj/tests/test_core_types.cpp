#include <cstdlib>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "puregaps/core_types.hpp"

using namespace puregaps;

namespace {
template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected puregaps::Error");
  return ErrorKind::Overflow;
}
}  // namespace

TEST_CASE("make_curve examples") {
  CHECK(make_curve(7, 4) == CurveParams{7, 4, 2, 9});
  CHECK(make_curve(8, 3) == CurveParams{8, 3, 3, 7});
  CHECK(kind_of([] { make_curve(7, 5); }) == ErrorKind::NotDivisor);
  CHECK(kind_of([] { make_curve(6, 7); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { make_curve(7, 1); }) == ErrorKind::TooSmall);
  CHECK(make_curve(6, 7, {.unchecked = true}) == CurveParams{6, 7, 1, 15});
}

TEST_CASE("hermitian") {
  CHECK(hermitian(4) == CurveParams{4, 5, 1, 6});
  CHECK(hermitian(7) == CurveParams{7, 8, 1, 21});
  CHECK(hermitian(9).is_hermitian());
  CHECK(kind_of([] { hermitian(1); }) == ErrorKind::TooSmall);
}

TEST_CASE("prime powers") {
  CHECK(prime_powers(2, 32) ==
        std::vector<Int>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32});
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(12));
  CHECK(is_prime_power(997 * 997));
  CHECK(quotient_degrees(8) == std::vector<Int>{3, 9});
  CHECK(quotient_degrees(7) == std::vector<Int>{2, 4, 8});
}

TEST_CASE("curve invariants over all small prime powers") {
  for (Int q : prime_powers(2, 200)) {
    CHECK(hermitian(q).m == q + 1);
    for (Int m : quotient_degrees(q)) {
      const auto c = make_curve(q, m);
      CHECK(c.m * c.N == q + 1);
      CHECK(2 * c.genus == (q - 1) * (m - 1));
    }
  }
}

TEST_CASE("bezout_for") {
  CHECK(bezout_for(4, 7) == KummerShape{4, 7, -1, 2});
  CHECK(bezout_for(3, 8) == KummerShape{3, 8, -1, 3});
  CHECK(kind_of([] { bezout_for(4, 6); }) == ErrorKind::NotCoprime);

  SUBCASE("Bezout identity holds for coprime pairs") {
    for (Int m = 2; m <= 40; ++m) {
      for (Int r = 1; r <= 60; ++r) {
        if (std::gcd(m, r) != 1) continue;
        const auto s = bezout_for(m, r);
        CHECK(s.a * r + s.b * m == 1);
        if ((r + 1) % m != 0) CHECK(2 * std::abs(s.a) <= m);
      }
    }
  }
}

TEST_CASE("places") {
  CHECK(PlaceId::infinity().is_infinity());
  CHECK(PlaceId::finite(3).index() == 3);
  CHECK(PlaceId::finite(3).name() == "P3");
  CHECK(kind_of([] { PlaceId::finite(0); }) == ErrorKind::UnsupportedSupport);
}

TEST_CASE("divisor degree is additive") {
  for (int trial = 0; trial < 500; ++trial) {
    Divisor a, b;
    for (int k = 0; k < 4; ++k) {
      a.add(PlaceId::finite(oracle::uniform(1, 8)), oracle::uniform(-20, 20));
      b.add(PlaceId::finite(oracle::uniform(1, 8)), oracle::uniform(-20, 20));
    }
    a.infinity_coeff = oracle::uniform(-30, 30);
    b.infinity_coeff = oracle::uniform(-30, 30);
    CHECK((a + b).degree() == a.degree() + b.degree());
    CHECK((a - b).degree() == a.degree() - b.degree());
    CHECK((a - a) == Divisor{});
  }
  Divisor d;
  CHECK(d.coefficient(PlaceId::finite(5)) == 0);
}

TEST_CASE("gap tuple validation") {
  CHECK_NOTHROW(validate(GapTuple{{1, 2}, false}));
  CHECK(kind_of([] { validate(GapTuple{{}, false}); }) == ErrorKind::BadArity);
  CHECK(kind_of([] { validate(GapTuple{{0, 2}, false}); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("checked arithmetic") {
  CHECK(floor_div(-7, 3) == -3);
  CHECK(ceil_div(-7, 3) == -2);
  CHECK(ceil_div(7, 3) == 3);
  CHECK(ceil_div(6, 3) == 2);
  for (Int a = -50; a <= 50; ++a)
    for (Int b = 1; b <= 9; ++b) CHECK(ceil_div(a, b) == oracle::ceil_div(a, b));
  CHECK(kind_of([] { checked::mul(Int{1} << 62, 4); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { checked::div_exact(7, 2); }) == ErrorKind::NotInteger);
}
