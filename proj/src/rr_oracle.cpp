#include "puregaps/rr_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

namespace puregaps {
namespace {

constexpr Int kDefaultWorkLimit = 100'000'000;

// Dense coefficient layout for a list of places: finite coefficients by
// position (the oracle is symmetric in the finite places, so only the
// multiset matters) and the P_inf coefficient.
struct PlaceLayout {
  std::vector<std::size_t> finite_slots;  // positions in the tuple that are finite
  std::ptrdiff_t infinity_slot = -1;
};

PlaceLayout layout_for(const CurveParams& curve, std::span<const PlaceId> places) {
  std::set<PlaceId> seen;
  PlaceLayout lay;
  for (std::size_t i = 0; i < places.size(); ++i) {
    const PlaceId& p = places[i];
    if (!seen.insert(p).second)
      throw Error(ErrorKind::PreconditionFailed, "places must be distinct: " + p.name() + " repeats");
    if (p.is_infinity()) {
      if (i + 1 != places.size())
        throw Error(ErrorKind::PreconditionFailed, "P_inf must be the last place");
      lay.infinity_slot = static_cast<std::ptrdiff_t>(i);
    } else {
      if (p.index() > curve.q)
        throw Error(ErrorKind::UnsupportedSupport, p.name() + " is not among P_1..P_q");
      lay.finite_slots.push_back(i);
    }
  }
  return lay;
}

// l(sum_i (s_i - shift) Q_i); `scratch` holds the finite coefficients.
Int ell_at(const CurveParams& curve, const PlaceLayout& lay, std::span<const Int> s, Int shift,
           std::vector<Int>& scratch) {
  scratch.clear();
  for (std::size_t i : lay.finite_slots) scratch.push_back(s[i] - shift);
  const Int inf = lay.infinity_slot >= 0 ? s[static_cast<std::size_t>(lay.infinity_slot)] - shift : 0;
  return ell(curve, scratch, inf);
}

}  // namespace

RamificationData RamificationData::of(const CurveParams& curve) {
  RamificationData r;
  r.curve = curve;
  for (Int i = 1; i <= curve.q; ++i) r.div_y.add(PlaceId::finite(i), 1);
  r.div_y.infinity_coeff = -curve.q;
  r.e = curve.m;
  r.v_inf_x = -curve.m;
  r.v_inf_y = -curve.q;
  return r;
}

Int ell(const CurveParams& curve, std::span<const Int> finite, Int infinity) {
  const Int m = curve.m;
  Int total = 0;
  for (Int t = 0; t < m; ++t) {
    Int deg = floor_div(checked::sub(infinity, checked::mul(t, curve.q)), m);
    for (Int a : finite) deg = checked::add(deg, floor_div(checked::add(a, t), m));
    if (deg >= 0) total = checked::add(total, deg + 1);
  }
  return total;
}

Int ell(const CurveParams& curve, const Divisor& D) {
  std::vector<Int> finite;
  finite.reserve(D.finite_coeffs.size());
  for (const auto& [idx, c] : D.finite_coeffs) {
    if (idx < 1 || idx > curve.q)
      throw Error(ErrorKind::UnsupportedSupport,
                  "place P" + std::to_string(idx) + " is not totally ramified here");
    finite.push_back(c);
  }
  return ell(curve, finite, D.infinity_coeff);
}

bool is_pure_gap_oracle(const CurveParams& curve, std::span<const PlaceId> places,
                        const GapTuple& t) {
  if (places.size() != t.size())
    throw Error(ErrorKind::BadArity, "tuple length does not match the number of places");
  validate(t);
  const PlaceLayout lay = layout_for(curve, places);
  std::vector<Int> scratch;
  return ell_at(curve, lay, t.coords, 0, scratch) == ell_at(curve, lay, t.coords, 1, scratch);
}

bool is_semigroup_member(const CurveParams& curve, std::span<const PlaceId> places,
                         std::span<const Int> s) {
  if (places.size() != s.size())
    throw Error(ErrorKind::BadArity, "tuple length does not match the number of places");
  if (static_cast<Int>(places.size()) > curve.q)
    throw Error(ErrorKind::BadArity, "semigroup test needs n <= q");
  for (Int v : s)
    if (v < 0) throw Error(ErrorKind::PreconditionFailed, "semigroup coordinates must be >= 0");
  const PlaceLayout lay = layout_for(curve, places);
  std::vector<Int> scratch;
  const Int base = ell_at(curve, lay, s, 0, scratch);
  std::vector<Int> lowered(s.begin(), s.end());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == 0) continue;
    --lowered[j];
    const bool drops = ell_at(curve, lay, lowered, 0, scratch) < base;
    ++lowered[j];
    if (!drops) return false;
  }
  return true;
}

Int default_work_limit() {
  if (const char* env = std::getenv("PUREGAPS_WORK_LIMIT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Int>(v);
  }
  return kDefaultWorkLimit;
}

PureGapSet brute_force_pure_gaps(const CurveParams& curve, std::span<const PlaceId> places,
                                 OracleOptions opts) {
  const Int n = static_cast<Int>(places.size());
  if (n < 2 || n > curve.q)
    throw Error(ErrorKind::BadArity, "need 2 <= n <= q, got n = " + std::to_string(n));
  const PlaceLayout lay = layout_for(curve, places);
  const Int bound = 2 * curve.genus - 1;

  // Two l-evaluations per box point.
  Int work = 2;
  for (Int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(work, bound, &work) || work > opts.work_limit)
      throw Error(ErrorKind::BoxTooLarge, "brute force over [1," + std::to_string(bound) + "]^" +
                                              std::to_string(n) + " exceeds the work limit of " +
                                              std::to_string(opts.work_limit));
  }

  const bool with_inf = lay.infinity_slot >= 0;
  PureGapSet out{curve, n, with_inf, {}, bound};
  if (bound < 1) return out;

  const unsigned workers = detail::worker_count(opts.threads, bound);
  std::vector<std::vector<GapTuple>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const Int lo = 1 + bound * w / workers;
      const Int hi = bound * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        std::vector<Int> scratch;
        detail::odometer(n, bound, lo, hi, [&](std::span<const Int> t) {
          if (ell_at(curve, lay, t, 0, scratch) == ell_at(curve, lay, t, 1, scratch))
            parts[w].push_back(GapTuple{{t.begin(), t.end()}, with_inf});
        });
      });
    }
  }
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out.tuples));
  std::sort(out.tuples.begin(), out.tuples.end());
  out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()), out.tuples.end());
  return out;
}

std::vector<Int> gap_set_oracle(const CurveParams& curve, PlaceId place) {
  if (!place.is_infinity() && place.index() > curve.q)
    throw Error(ErrorKind::UnsupportedSupport, place.name() + " is not among P_1..P_q");
  std::vector<Int> gaps;
  Int prev = 1;  // l(0)
  for (Int s = 1; s <= 2 * curve.genus - 1; ++s) {
    const Int cur = place.is_infinity() ? ell(curve, std::span<const Int>{}, s)
                                        : ell(curve, std::span<const Int>(&s, 1), 0);
    if (cur == prev) gaps.push_back(s);
    prev = cur;
  }
  return gaps;
}

}  // namespace puregaps
