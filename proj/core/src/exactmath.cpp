#include "hilb/exactmath.hpp"

#include <cstdint>

#include "hilb/errors.hpp"

namespace hilb {

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return x - Rational(rational_floor(x)) - make_rational(1, 2);
}

namespace {

// s(h,k) over int64: 4k^2 s = sum_{r, hr mod k != 0} (2r-k)(2m-k) with
// m = h r mod k. Each addend has magnitude < k^2 and there are k-1 of
// them, so the accumulator stays below k^3; safe up to k ~ 2^20.
Rational dedekind_small(std::int64_t h, std::int64_t k) {
  std::int64_t acc = 0;
  std::int64_t m = 0;
  for (std::int64_t r = 1; r < k; ++r) {
    m += h;
    if (m >= k) m -= k * (m / k);
    if (m == 0) continue;
    acc += (2 * r - k) * (2 * m - k);
  }
  return make_rational(Integer(acc), Integer(4) * k * k);
}

Rational dedekind_large(long h, unsigned long k) {
  Integer acc = 0;
  Integer kk(k);
  Integer m = 0;
  for (unsigned long r = 1; r < k; ++r) {
    m += h;
    m %= kk;  // h already reduced to [0,k), so m stays nonnegative
    if (m == 0) continue;
    acc += (Integer(2) * static_cast<long>(r) - kk) * (Integer(2) * m - kk);
  }
  return make_rational(acc, Integer(4) * kk * kk);
}

}  // namespace

Rational dedekind_sum(long h, unsigned long k) {
  if (k < 1) throw precondition_error("k >= 1 violated in dedekind_sum");
  long hr = h % static_cast<long>(k);
  if (hr < 0) hr += static_cast<long>(k);
  if (k <= (1ul << 20)) {
    return dedekind_small(hr, static_cast<std::int64_t>(k));
  }
  return dedekind_large(hr, k);
}

UnitPhase omega(long alpha, long beta, long h, unsigned long k) {
  if (h < 0 || static_cast<unsigned long>(h) >= k) {
    throw precondition_error("0 <= h < k violated in omega");
  }
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), Integer(h).get_mpz_t(), k);
  if (k > 1 && g != 1) {
    throw precondition_error("gcd(h,k) = 1 violated in omega");
  }
  Rational e = -(Rational(alpha) * dedekind_sum(h, k) +
                 Rational(beta) * dedekind_sum(2 * h, k));
  return UnitPhase(e);
}

}  // namespace hilb
