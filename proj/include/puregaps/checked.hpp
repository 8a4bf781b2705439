#pragma once

// Overflow-checked 64-bit integer helpers. Every count in this library is
// exact; a result that does not fit raises ErrorKind::Overflow.

#include <cstdint>

#include "puregaps/errors.hpp"

namespace puregaps {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

inline Int pow(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

/// Exact division that refuses to truncate.
inline Int div_exact(Int num, Int den) {
  if (den == 0 || num % den != 0) throw Error(ErrorKind::NotInteger, "inexact division");
  return num / den;
}

}  // namespace checked

/// floor(a / b) for b > 0, valid for negative a.
constexpr Int floor_div(Int a, Int b) noexcept {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// ceil(a / b) for b > 0, valid for negative a.
constexpr Int ceil_div(Int a, Int b) noexcept { return -floor_div(-a, b); }

}  // namespace puregaps
