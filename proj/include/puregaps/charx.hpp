#pragma once

// Membership tests for pure gaps via ceiling inequalities, and bounded
// enumeration of pure-gap sets.

#include <cstddef>
#include <span>
#include <vector>

#include "puregaps/core_types.hpp"

namespace puregaps {

/// Sorted (lexicographic), duplicate-free set of pure gaps found by scanning
/// [1, bound]^n.
struct PureGapSet {
  CurveParams curve;
  Int n = 0;
  bool includes_infinity = false;
  std::vector<GapTuple> tuples;
  Int bound = 0;

  std::size_t size() const noexcept { return tuples.size(); }
};

/// Pure gap at (P_1..P_n) of a Kummer extension with r finite totally
/// ramified places. Requires 2 <= n <= r and a tuple without P_inf.
bool is_pure_gap_kummer(const KummerShape& shape, const GapTuple& t);

/// Pure gap at (P_1..P_{n-1}, P_inf); the last coordinate is P_inf's.
/// Requires 2 <= n <= r + 1.
bool is_pure_gap_kummer_inf(const KummerShape& shape, const GapTuple& t);

/// Pure gap at n finite places of the quotient curve (r = q).
bool is_pure_gap_quotient(const CurveParams& curve, const GapTuple& t);

/// The Hermitian specialisation (m = q + 1) written out with q + 1 directly.
bool is_pure_gap_hermitian(Int q, const GapTuple& t);

/// t = m * i + j with 1 <= j <= m.
struct Decomposition {
  Int i = 0;
  Int j = 0;
  bool operator==(const Decomposition&) const = default;
};
Decomposition decompose(Int t, Int m);

struct EnumerationOptions {
  /// Maximum number of box points scanned before giving up with Overflow.
  Int max_points = 2'000'000'000;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Scans [1, 2g-1]^n. With include_infinity the last coordinate is tested as
/// the P_inf coordinate.
PureGapSet enumerate_pure_gaps(const CurveParams& curve, Int n, bool include_infinity,
                               EnumerationOptions opts = {});

struct BoxCount {
  Int pure = 0;
  Int semigroup = 0;
  Int total = 0;

  Int gaps() const noexcept { return total - semigroup; }
  bool operator==(const BoxCount&) const = default;
};

/// Classifies every (t1, t2) in [0, t1_max] x [0, t2_max] at (P_1, P_2).
BoxCount count_in_box(const CurveParams& curve, Int t1_max, Int t2_max);

namespace detail {
// Shared by the threaded scanners: visits every point of [1, bound]^n whose
// first coordinate lies in [first_lo, first_hi], in lexicographic order.
template <class Fn>
void odometer(Int n, Int bound, Int first_lo, Int first_hi, Fn&& fn) {
  if (n < 1 || bound < 1 || first_lo > first_hi) return;
  std::vector<Int> cur(static_cast<std::size_t>(n), 1);
  cur[0] = first_lo;
  for (;;) {
    fn(std::span<const Int>(cur));
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      const Int cap = (k == 0) ? first_hi : bound;
      if (cur[k] < cap) {
        ++cur[k];
        break;
      }
      cur[k] = 1;
      if (k == 0) return;
    }
  }
}

unsigned worker_count(unsigned requested, Int first_range);
}  // namespace detail

}  // namespace puregaps
