#include "puregaps/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace puregaps {

using checked::add;
using checked::mul;
using checked::sub;

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  // r * (n - k + i) is divisible by i at every step; divide through the gcd
  // first so intermediates stay as small as the final value allows.
  for (Int i = 1; i <= k; ++i) {
    const Int num = n - k + i;
    const Int g = std::gcd(r, i);
    r = mul(r / g, num / (i / g));
  }
  return r;
}

Int binom_solutions(Int A, Int n) {
  if (A < 0 || n < 1)
    throw Error(ErrorKind::PreconditionFailed, "binom_solutions needs A >= 0 and n >= 1");
  return binomial(add(A, n - 1), n - 1);
}

Int s_n_hermitian(Int n, Int t) {
  if (n < 0) throw Error(ErrorKind::PreconditionFailed, "n must be >= 0");
  if (n == 0) return 1;
  if (t <= n) return 0;
  return mul(t - n, checked::pow(t, n - 1));
}

CountBreakdown count_pure_gaps_hermitian(Int q, Int n) {
  if (q < 2 || n < 2) throw Error(ErrorKind::PreconditionFailed, "need q >= 2 and n >= 2");
  CountBreakdown out;
  for (Int A = 0; A <= q - n - 1; ++A) {
    CountTerm term{A, binom_solutions(A, n), s_n_hermitian(n, q - A), 0};
    term.product = mul(term.weight, term.s_value);
    out.total = add(out.total, term.product);
    out.terms.push_back(term);
  }
  return out;
}

Int hermitian_pair_closed(Int q) {
  if (q < 2) throw Error(ErrorKind::PreconditionFailed, "q must be >= 2");
  return checked::div_exact(mul(mul(mul(q, q - 1), q - 2), q + 3), 12);
}

SnAContext::SnAContext(Int q, Int N, Int A) : q_(q), N_(N), A_(A) {
  if (N < 1 || A < 0 || A >= q)
    throw Error(ErrorKind::PreconditionFailed, "S_n^A context needs N >= 1 and 0 <= A < q");
  t_ = ceil_div(q - A, N);
  beta_ = q - A - N * (t_ - 1);
}

Int SnAContext::s(Int n, Int t) const {
  if (n < 0) throw Error(ErrorKind::PreconditionFailed, "n must be >= 0");
  if (n == 0) return 1;
  if (n <= beta_) return checked::pow(t - 1, n);
  const Int lam = lambda(n);
  if (t <= lam) return 0;
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find({n, t}); it != memo_.end()) return it->second;
  }
  Int sum = 0;
  for (Int i = 0; i < n; ++i)
    sum = add(sum, mul(mul(binomial(n, i), s(i, lam)), checked::pow(t - lam, n - i)));
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::pair{n, t}, sum);
  return sum;
}

Int s_n_A(Int n, const SnAContext& ctx) { return ctx.s(n, ctx.t()); }

CountBreakdown count_pure_gaps_quotient(const CurveParams& curve, Int n) {
  if (n < 2) throw Error(ErrorKind::BadArity, "n must be >= 2");
  CountBreakdown out;
  const Int q = curve.q, N = curve.N;
  for (Int A = 0; A <= q - n - N; ++A) {
    const SnAContext ctx(q, N, A);
    CountTerm term{A, binom_solutions(A, n), s_n_A(n, ctx), 0};
    term.product = mul(term.weight, term.s_value);
    out.total = add(out.total, term.product);
    out.terms.push_back(term);
  }
  return out;
}

namespace {
void require_pair_range(const CurveParams& c) {
  if (c.q - 2 - c.N < 0)
    throw Error(ErrorKind::PreconditionFailed,
                "closed pair formulas need q - 2 - N >= 0 (q = " + std::to_string(c.q) +
                    ", N = " + std::to_string(c.N) + ")");
}
}  // namespace

Int pair_closed_pure(const CurveParams& c) {
  require_pair_range(c);
  const Int qm = mul(c.q + 1, c.m - 1);
  const Int inner = add(sub(qm, 2 * c.m), c.N + 7);
  return sub(checked::div_exact(mul(qm, inner), 12), mul(c.q, c.m - 1));
}

Int pair_closed_gaps(const CurveParams& c) {
  require_pair_range(c);
  const Int q = c.q, m = c.m, N = c.N;
  Int poly = mul(3 * m - 1, mul(q, q));
  poly = sub(poly, mul(6 * m + N + 5, q));
  poly = add(poly, 3 * m - N - 4);
  return add(checked::div_exact(mul(m - 1, poly), 12), mul(q, m - 1));
}

std::vector<Int> gap_set_single(const CurveParams& c) {
  std::vector<Int> gaps;
  for (Int j = 1; j <= c.m - 1; ++j)
    for (Int k = 0; k <= c.q - 1 - c.N * j; ++k) gaps.push_back(add(mul(c.m, k), j));
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::vector<Int> gap_set_infinity(const CurveParams& c) {
  // Every integer > (m-1)(q-1) - 1 = 2g - 1 is representable.
  const Int frobenius = 2 * c.genus - 1;
  std::vector<bool> reachable(static_cast<std::size_t>(std::max<Int>(frobenius, 0) + 1), false);
  std::vector<Int> gaps;
  for (Int s = 0; s <= frobenius; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    reachable[idx] = (s == 0) || (s >= c.m && reachable[idx - static_cast<std::size_t>(c.m)]) ||
                     (s >= c.q && reachable[idx - static_cast<std::size_t>(c.q)]);
    if (!reachable[idx]) gaps.push_back(s);
  }
  return gaps;
}

Int sum_gaps_single(const CurveParams& c) {
  const Int tail = 2 * c.q * c.m - c.m - c.q - 1;
  return checked::div_exact(mul(mul(c.m - 1, c.q - 1), tail), 12);
}

Int gaps_pair_via_homma(Int sum1, Int sum2, Int pure_count) {
  if (sum1 < 0 || sum2 < 0 || pure_count < 0)
    throw Error(ErrorKind::PreconditionFailed, "Homma identity inputs must be >= 0");
  return sub(add(sum1, sum2), pure_count);
}

}  // namespace puregaps
