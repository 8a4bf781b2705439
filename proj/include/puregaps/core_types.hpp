#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "puregaps/checked.hpp"

namespace puregaps {

/// The quotient curve y^m = x^q + x over F_{q^2}, with q + 1 = m * N.
struct CurveParams {
  Int q = 0;
  Int m = 0;
  Int N = 0;
  Int genus = 0;

  bool is_hermitian() const noexcept { return N == 1; }
  auto operator<=>(const CurveParams&) const = default;
};

/// Parameters of a Kummer extension y^m = f(x)^lambda with deg f = r,
/// together with a Bezout pair a*r + b*m = 1.
struct KummerShape {
  Int m = 0;
  Int r = 0;
  Int a = 0;
  Int b = 0;

  auto operator<=>(const KummerShape&) const = default;
};

struct Infinity {
  auto operator<=>(const Infinity&) const = default;
};

/// A totally ramified rational place: P_i for i in 1..q, or P_inf.
class PlaceId {
 public:
  static PlaceId finite(Int index);
  static PlaceId infinity() { return PlaceId(); }

  bool is_infinity() const noexcept { return index_ == 0; }
  /// 1-based index of a finite place; 0 for infinity.
  Int index() const noexcept { return index_; }
  std::string name() const;

  auto operator<=>(const PlaceId&) const = default;

 private:
  PlaceId() = default;
  explicit PlaceId(Int index) : index_(index) {}
  Int index_ = 0;
};

/// An n-tuple of positive integers. When includes_infinity is set the last
/// coordinate belongs to P_inf.
struct GapTuple {
  std::vector<Int> coords;
  bool includes_infinity = false;

  std::size_t size() const noexcept { return coords.size(); }
  auto operator<=>(const GapTuple&) const = default;
};

/// Validates the GapTuple invariants (n >= 1, every coordinate >= 1).
void validate(const GapTuple& t);

/// Integer combination of P_1..P_q and P_inf. Absent keys are zero.
struct Divisor {
  std::map<Int, Int> finite_coeffs;
  Int infinity_coeff = 0;

  Int coefficient(PlaceId p) const;
  void add(PlaceId p, Int coeff);
  Int degree() const;

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  bool operator==(const Divisor&) const = default;
};

/// One summand A of a pure-gap count: weight * s_value = product.
struct CountTerm {
  Int A = 0;
  Int weight = 0;
  Int s_value = 0;
  Int product = 0;

  bool operator==(const CountTerm&) const = default;
};

struct CountBreakdown {
  std::vector<CountTerm> terms;
  Int total = 0;

  bool operator==(const CountBreakdown&) const = default;
};

// ---------------------------------------------------------------------------

struct CurveOptions {
  /// Skip the prime-power test on q (formula exploration only).
  bool unchecked = false;
};

bool is_prime_power(Int q);

/// Validated quotient curve y^m = x^q + x.
CurveParams make_curve(Int q, Int m, CurveOptions opts = {});

/// The Hermitian curve y^{q+1} = x^q + x, i.e. make_curve(q, q + 1).
CurveParams hermitian(Int q, CurveOptions opts = {});

/// Bezout pair for (m, r). Returns a = -1, b = N when r + 1 = m * N,
/// otherwise the extended-Euclid pair with minimal |a|.
KummerShape bezout_for(Int m, Int r);

/// The Kummer shape of a quotient curve: r = q, a = -1, b = N.
KummerShape kummer_shape(const CurveParams& curve);

/// Prime powers q with lo <= q <= hi.
std::vector<Int> prime_powers(Int lo, Int hi);

/// Divisors m >= 2 of q + 1, ascending.
std::vector<Int> quotient_degrees(Int q);

}  // namespace puregaps
