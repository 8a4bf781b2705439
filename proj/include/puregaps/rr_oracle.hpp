#pragma once

// Riemann-Roch dimensions for divisors supported on the totally ramified
// places P_1..P_q, P_inf of y^m = x^q + x, computed independently of the
// inequality characterisations in charx.
//
// Every element of L(D) splits uniquely as sum_{t<m} y^t g_t(x), and the
// y^t-component lies in a Riemann-Roch space of the rational field:
//
//   l(D) = sum_{t=0}^{m-1} max(0, deg_t + 1),
//   deg_t = sum_i floor((a_i + t)/m) + floor((a_inf - t q)/m),
//
// using (x - alpha_i) = m P_i - m P_inf and (y) = P_1 + ... + P_q - q P_inf.

#include <span>
#include <vector>

#include "puregaps/charx.hpp"
#include "puregaps/core_types.hpp"

namespace puregaps {

struct RamificationData {
  CurveParams curve;
  Divisor div_y;  ///< principal divisor of y
  Int e = 0;      ///< ramification index at every listed place
  Int v_inf_x = 0;
  Int v_inf_y = 0;

  static RamificationData of(const CurveParams& curve);
};

/// l(D). Throws UnsupportedSupport if D has a finite index outside 1..q.
Int ell(const CurveParams& curve, const Divisor& D);

/// l(D) for D = sum_i finite[i] P_{i+1} + infinity * P_inf; no allocation.
Int ell(const CurveParams& curve, std::span<const Int> finite, Int infinity);

/// l(sum s_i Q_i) == l(sum (s_i - 1) Q_i).
bool is_pure_gap_oracle(const CurveParams& curve, std::span<const PlaceId> places,
                        const GapTuple& t);

/// s in H(Q_1..Q_n): for every j with s_j >= 1, l(D) > l(D - Q_j).
/// Requires n <= q.
bool is_semigroup_member(const CurveParams& curve, std::span<const PlaceId> places,
                         std::span<const Int> s);

/// Default cap on l-evaluations for brute-force scans; PUREGAPS_WORK_LIMIT
/// overrides it.
Int default_work_limit();

struct OracleOptions {
  Int work_limit = default_work_limit();
  unsigned threads = 0;
};

/// Exhaustive scan of [1, 2g-1]^n with is_pure_gap_oracle.
PureGapSet brute_force_pure_gaps(const CurveParams& curve, std::span<const PlaceId> places,
                                 OracleOptions opts = {});

/// s in 1..2g-1 with l(sP) == l((s-1)P).
std::vector<Int> gap_set_oracle(const CurveParams& curve, PlaceId place);

}  // namespace puregaps
