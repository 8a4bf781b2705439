#include "puregaps/core_types.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace puregaps {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
  }
  return "Unknown";
}

PlaceId PlaceId::finite(Int index) {
  if (index < 1) throw Error(ErrorKind::UnsupportedSupport, "finite place index must be >= 1");
  return PlaceId(index);
}

std::string PlaceId::name() const {
  return is_infinity() ? std::string("P_inf") : "P" + std::to_string(index_);
}

void validate(const GapTuple& t) {
  if (t.coords.empty()) throw Error(ErrorKind::BadArity, "empty tuple");
  for (Int c : t.coords)
    if (c < 1) throw Error(ErrorKind::PreconditionFailed, "tuple coordinates must be >= 1");
}

Int Divisor::coefficient(PlaceId p) const {
  if (p.is_infinity()) return infinity_coeff;
  auto it = finite_coeffs.find(p.index());
  return it == finite_coeffs.end() ? 0 : it->second;
}

void Divisor::add(PlaceId p, Int coeff) {
  if (p.is_infinity()) {
    infinity_coeff = checked::add(infinity_coeff, coeff);
    return;
  }
  Int& slot = finite_coeffs[p.index()];
  slot = checked::add(slot, coeff);
  if (slot == 0) finite_coeffs.erase(p.index());
}

Int Divisor::degree() const {
  Int d = infinity_coeff;
  for (const auto& [idx, c] : finite_coeffs) d = checked::add(d, c);
  return d;
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor out = *this;
  for (const auto& [idx, c] : other.finite_coeffs) out.add(PlaceId::finite(idx), c);
  out.infinity_coeff = checked::add(out.infinity_coeff, other.infinity_coeff);
  return out;
}

Divisor Divisor::operator-(const Divisor& other) const {
  Divisor out = *this;
  for (const auto& [idx, c] : other.finite_coeffs) out.add(PlaceId::finite(idx), checked::sub(0, c));
  out.infinity_coeff = checked::sub(out.infinity_coeff, other.infinity_coeff);
  return out;
}

bool is_prime_power(Int q) {
  if (q < 2) return false;
  Int p = 0;
  for (Int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

CurveParams make_curve(Int q, Int m, CurveOptions opts) {
  if (q < 2) throw Error(ErrorKind::TooSmall, "q must be >= 2, got " + std::to_string(q));
  if (m < 2) throw Error(ErrorKind::TooSmall, "m must be >= 2, got " + std::to_string(m));
  if (!opts.unchecked && !is_prime_power(q))
    throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const Int q1 = checked::add(q, 1);
  if (q1 % m != 0)
    throw Error(ErrorKind::NotDivisor,
                "m = " + std::to_string(m) + " does not divide q + 1 = " + std::to_string(q1));
  CurveParams c;
  c.q = q;
  c.m = m;
  c.N = q1 / m;
  c.genus = checked::div_exact(checked::mul(q - 1, m - 1), 2);
  return c;
}

CurveParams hermitian(Int q, CurveOptions opts) {
  if (q < 2) throw Error(ErrorKind::TooSmall, "q must be >= 2, got " + std::to_string(q));
  return make_curve(q, checked::add(q, 1), opts);
}

KummerShape bezout_for(Int m, Int r) {
  if (m < 1 || r < 1) throw Error(ErrorKind::TooSmall, "m and r must be positive");
  if (std::gcd(m, r) != 1)
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(m) + ", " + std::to_string(r) + ") != 1");
  if ((r + 1) % m == 0) return KummerShape{m, r, -1, (r + 1) / m};

  // Extended Euclid on (r, m): old_s * r + old_t * m = 1.
  Int old_r = r, cur_r = m;
  Int old_s = 1, cur_s = 0;
  Int old_t = 0, cur_t = 1;
  while (cur_r != 0) {
    const Int quot = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - quot * cur_r);
    old_s = std::exchange(cur_s, old_s - quot * cur_s);
    old_t = std::exchange(cur_t, old_t - quot * cur_t);
  }
  // Shift along the solution line a -> a + k*m, b -> b - k*r to minimise |a|.
  Int a = old_s, b = old_t;
  const Int k = floor_div(a, m);
  a -= k * m;
  b += k * r;
  if (2 * a > m) {
    a -= m;
    b += r;
  }
  return KummerShape{m, r, a, b};
}

KummerShape kummer_shape(const CurveParams& curve) {
  return KummerShape{curve.m, curve.q, -1, curve.N};
}

std::vector<Int> prime_powers(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int q = std::max<Int>(lo, 2); q <= hi; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

std::vector<Int> quotient_degrees(Int q) {
  std::vector<Int> out;
  for (Int m = 2; m <= q + 1; ++m)
    if ((q + 1) % m == 0) out.push_back(m);
  return out;
}

}  // namespace puregaps
