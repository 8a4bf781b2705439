#include "puregaps/charx.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "puregaps/rr_oracle.hpp"

namespace puregaps {
namespace {

using checked::add;
using checked::mul;

void require_arity(std::size_t n, Int max_n) {
  if (n < 2 || static_cast<Int>(n) > max_n)
    throw Error(ErrorKind::BadArity,
                "need 2 <= n <= " + std::to_string(max_n) + ", got n = " + std::to_string(n));
}

// m * sum_{s != k} ceil((t_k - t_s)/m) + m * free * ceil(t_k/m) over the
// coordinates in `t`.
Int finite_lhs(std::span<const Int> t, std::size_t k, Int m, Int free_places) {
  Int sum = 0;
  for (std::size_t s = 0; s < t.size(); ++s)
    if (s != k) sum = add(sum, ceil_div(t[k] - t[s], m));
  return add(mul(m, sum), mul(mul(m, free_places), ceil_div(t[k], m)));
}

bool finite_test(std::span<const Int> t, Int m, Int r) {
  const Int n = static_cast<Int>(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!(finite_lhs(t, k, m, r - n) > mul(r, t[k]))) return false;
  return true;
}

bool infinity_test(std::span<const Int> t, const KummerShape& s) {
  const std::size_t n = t.size();
  const Int m = s.m;
  const Int t_inf = t[n - 1];
  const Int free_places = s.r - static_cast<Int>(n) + 1;

  // Condition at P_inf; the sum starts at the second coordinate.
  Int sum = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) sum = add(sum, ceil_div(mul(-s.a, t_inf) - t[i], m));
  const Int lhs = add(mul(m, sum), mul(mul(m, free_places), ceil_div(mul(-s.a, t_inf), m)));
  const Int rhs = add(t[0], mul(add(s.a, mul(s.b, m)), t_inf));
  if (!(lhs > rhs)) return false;

  // Conditions at the finite places.
  const auto finite = t.first(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (!(finite_lhs(finite, j, m, free_places) > add(t_inf, mul(s.r, t[j])))) return false;
  return true;
}

void check_shape(const KummerShape& s) {
  if (s.m < 2) throw Error(ErrorKind::TooSmall, "m must be >= 2");
  if (s.r < 1) throw Error(ErrorKind::TooSmall, "r must be >= 1");
  if (s.a * s.r + s.b * s.m != 1)
    throw Error(ErrorKind::PreconditionFailed, "Bezout pair does not satisfy a*r + b*m = 1");
}

}  // namespace

bool is_pure_gap_kummer(const KummerShape& shape, const GapTuple& t) {
  check_shape(shape);
  if (t.includes_infinity)
    throw Error(ErrorKind::PreconditionFailed, "tuple includes P_inf; use is_pure_gap_kummer_inf");
  require_arity(t.size(), shape.r);
  validate(t);
  return finite_test(t.coords, shape.m, shape.r);
}

bool is_pure_gap_kummer_inf(const KummerShape& shape, const GapTuple& t) {
  check_shape(shape);
  if (!t.includes_infinity)
    throw Error(ErrorKind::PreconditionFailed, "tuple has no P_inf coordinate");
  require_arity(t.size(), shape.r + 1);
  validate(t);
  return infinity_test(t.coords, shape);
}

bool is_pure_gap_quotient(const CurveParams& curve, const GapTuple& t) {
  require_arity(t.size(), curve.q);
  validate(t);
  return finite_test(t.coords, curve.m, curve.q);
}

bool is_pure_gap_hermitian(Int q, const GapTuple& t) {
  require_arity(t.size(), q);
  validate(t);
  const Int q1 = q + 1;
  const Int n = static_cast<Int>(t.size());
  const auto& c = t.coords;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Int sum = 0;
    for (std::size_t s = 0; s < c.size(); ++s)
      if (s != k) sum = add(sum, ceil_div(c[k] - c[s], q1));
    const Int lhs = add(mul(q1, sum), mul(mul(q1, q - n), ceil_div(c[k], q1)));
    if (!(lhs > mul(q, c[k]))) return false;
  }
  return true;
}

Decomposition decompose(Int t, Int m) {
  if (t < 1 || m < 2) throw Error(ErrorKind::PreconditionFailed, "decompose needs t >= 1, m >= 2");
  const Int i = (t - 1) / m;
  return {i, t - m * i};
}

namespace detail {
unsigned worker_count(unsigned requested, Int first_range) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (first_range < static_cast<Int>(w)) w = static_cast<unsigned>(std::max<Int>(1, first_range));
  return w;
}
}  // namespace detail

PureGapSet enumerate_pure_gaps(const CurveParams& curve, Int n, bool include_infinity,
                               EnumerationOptions opts) {
  require_arity(static_cast<std::size_t>(std::max<Int>(n, 0)), curve.q);
  const Int bound = 2 * curve.genus - 1;

  Int points = 1;
  for (Int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(points, bound, &points) || points > opts.max_points)
      throw Error(ErrorKind::Overflow, "search box [1," + std::to_string(bound) + "]^" +
                                           std::to_string(n) + " exceeds the enumeration limit");
  }

  const KummerShape shape = kummer_shape(curve);
  auto member = [&](std::span<const Int> t) {
    return include_infinity ? infinity_test(t, shape) : finite_test(t, curve.m, curve.q);
  };

  PureGapSet out{curve, n, include_infinity, {}, bound};
  if (bound < 1) return out;

  const unsigned workers = detail::worker_count(opts.threads, bound);
  std::vector<std::vector<GapTuple>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const Int lo = 1 + bound * w / workers;
      const Int hi = bound * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        detail::odometer(n, bound, lo, hi, [&](std::span<const Int> t) {
          if (member(t)) parts[w].push_back(GapTuple{{t.begin(), t.end()}, include_infinity});
        });
      });
    }
  }
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out.tuples));
  std::sort(out.tuples.begin(), out.tuples.end());
  out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()), out.tuples.end());
  return out;
}

BoxCount count_in_box(const CurveParams& curve, Int t1_max, Int t2_max) {
  if (t1_max < 0 || t2_max < 0)
    throw Error(ErrorKind::PreconditionFailed, "box corners must be nonnegative");
  const std::vector<PlaceId> places{PlaceId::finite(1), PlaceId::finite(2)};
  BoxCount bc;
  for (Int a = 0; a <= t1_max; ++a) {
    for (Int b = 0; b <= t2_max; ++b) {
      ++bc.total;
      const std::vector<Int> s{a, b};
      if (a >= 1 && b >= 1 && finite_test(s, curve.m, curve.q)) ++bc.pure;
      if (is_semigroup_member(curve, places, s)) ++bc.semigroup;
    }
  }
  return bc;
}

}  // namespace puregaps
