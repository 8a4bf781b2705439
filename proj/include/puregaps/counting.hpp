#pragma once

// Closed-form and recursive counts of gaps and pure gaps on y^m = x^q + x.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "puregaps/core_types.hpp"

namespace puregaps {

/// Number of nonnegative solutions of x_1 + ... + x_n = A, i.e. C(A+n-1, n-1).
Int binom_solutions(Int A, Int n);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
Int binomial(Int n, Int k);

/// Hermitian lattice count: (t - n) t^{n-1} for t >= n + 1, otherwise 0;
/// S_0(t) = 1.
Int s_n_hermitian(Int n, Int t);

/// Pure gaps at n finite places of the Hermitian curve over F_{q^2}.
CountBreakdown count_pure_gaps_hermitian(Int q, Int n);

/// q (q-1) (q-2) (q+3) / 12.
Int hermitian_pair_closed(Int q);

/// Fixed (q, N, A) data behind S_n^A(t): q - A = N (t - 1) + beta with
/// 1 <= beta <= N, and lambda_k = ceil((k - beta)/N) + 1.
class SnAContext {
 public:
  SnAContext(Int q, Int N, Int A);

  Int q() const noexcept { return q_; }
  Int N() const noexcept { return N_; }
  Int A() const noexcept { return A_; }
  Int t() const noexcept { return t_; }
  Int beta() const noexcept { return beta_; }
  Int lambda(Int k) const noexcept { return ceil_div(k - beta_, N_) + 1; }

  /// S_n^A at argument t, memoised on (n, t). Subcalls keep this beta.
  Int s(Int n, Int t) const;

 private:
  Int q_, N_, A_, t_, beta_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Int, Int>, Int> memo_;
};

/// S_n^A(t) at the context's own t.
Int s_n_A(Int n, const SnAContext& ctx);

/// Pure gaps at n finite places of the quotient curve, summed over A.
CountBreakdown count_pure_gaps_quotient(const CurveParams& curve, Int n);

/// Closed form for #G_0(P_1, P_2); requires q - 2 - N >= 0.
Int pair_closed_pure(const CurveParams& curve);

/// Closed form for #G(P_1, P_2); requires q - 2 - N >= 0.
Int pair_closed_gaps(const CurveParams& curve);

/// { m k + j : 1 <= j <= m - 1, 0 <= k <= q - 1 - N j }, sorted.
std::vector<Int> gap_set_single(const CurveParams& curve);

/// Gaps at P_inf: the complement of the numerical semigroup <m, q> generated
/// by the pole orders of x and y there.
std::vector<Int> gap_set_infinity(const CurveParams& curve);

/// (m-1)(q-1)(2qm - m - q - 1) / 12.
Int sum_gaps_single(const CurveParams& curve);

/// #G(Q1,Q2) = sum G(Q1) + sum G(Q2) - #G_0(Q1,Q2).
Int gaps_pair_via_homma(Int sum1, Int sum2, Int pure_count);

}  // namespace puregaps
