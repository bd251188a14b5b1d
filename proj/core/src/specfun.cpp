#include "hilb/specfun.hpp"

#include <cmath>

#include "hilb/errors.hpp"

namespace hilb {

Real gamma_half_integer(long twice_x, long bits) {
  if (twice_x < 1) {
    throw precondition_error("x > 0 violated in gamma_half_integer");
  }
  if (twice_x % 2 == 0) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(twice_x / 2 - 1));
    return Real::of(f, bits);
  }
  // Gamma(m + 1/2) = (2m-1)!! 2^{-m} sqrt(pi)
  long m = (twice_x - 1) / 2;
  Real root_pi = sqrt(const_pi(bits));
  if (m == 0) return root_pi;
  Integer df;
  mpz_2fac_ui(df.get_mpz_t(), static_cast<unsigned long>(2 * m - 1));
  return mul_2si(Real::of(df, bits) * root_pi, -m);
}

Real bessel_i(BesselOrder v, const Real& x, const PrecisionContext& ctx) {
  if (v.twice_v < 1) {
    throw precondition_error("v > 0 violated in bessel_i");
  }
  if (!(x.sgn() > 0)) {
    throw precondition_error("x > 0 violated in bessel_i");
  }
  long wb = ctx.working_bits();
  long bits = wb + 32;

  Real half_x = mul_2si(Real::of(1, bits) * x, -1);
  Real q = half_x * half_x;  // (x/2)^2

  // sum_{m>=0} (x/2)^{2m} / (m! (v+1)_m), every term positive, consecutive
  // ratio q / (m (v+m)) -> 0, so stop once a term is 2^{-wb} of the sum.
  Real sum = Real::of(1, bits);
  Real term = Real::of(1, bits);
  for (long m = 1;; ++m) {
    // m (v+m) = m (twice_v + 2m) / 2
    Real denom = mul_2si(Real::of(m, bits) * Real::of(v.twice_v + 2 * m, bits), -1);
    term = term * q / denom;
    sum += term;
    if (exponent_of(term) < exponent_of(sum) - wb - 8) break;
  }

  // prefactor (x/2)^v / Gamma(v+1), v = twice_v/2
  Real pre = (v.twice_v % 2 == 0) ? pow_si(half_x, v.twice_v / 2)
                                  : pow_si(sqrt(half_x), v.twice_v);
  return pre * sum / gamma_half_integer(v.twice_v + 2, bits);
}

Rational l_star_r1(int parity, const EtaExponents& e, const Rational& j,
                   long k) {
  Integer kk = Integer(k) * k;
  if (parity == 0) {
    Rational r1 = make_rational(Integer(-(e.alpha + 2 * e.beta)), 12 * kk) -
                  2 * j / Rational(kk);
    if (!(r1 > 0)) {
      throw precondition_error("j < p0 violated in l_star (r1 <= 0)");
    }
    return r1;
  }
  Rational r1 = make_rational(Integer(-(2 * e.alpha + e.beta)), 24 * kk) -
                j / Rational(kk);
  if (!(r1 > 0)) {
    throw precondition_error("j < p1 violated in l_star (r1 <= 0)");
  }
  return r1;
}

Rational l_star_r2(const EtaExponents& e, long n) {
  Rational r2 = make_rational(e.alpha + 2 * e.beta, 12) + Rational(2 * n);
  if (!(r2 > 0)) {
    throw precondition_error("n > p0 violated in l_star (r2 <= 0)");
  }
  return r2;
}

Real l_star(int parity, const EtaExponents& e, const Rational& j, long k,
            long n, const PrecisionContext& ctx) {
  if (parity != 0 && parity != 1) {
    throw precondition_error("parity in {0,1} violated in l_star");
  }
  Rational r1 = l_star_r1(parity, e, j, k);
  Rational r2 = l_star_r2(e, n);
  long bits = ctx.working_bits() + 32;

  // (r1/r2)^{e1} with e1 = (2-(alpha+beta))/4: a fourth root raised to the
  // exact integer 2-(alpha+beta), so no logarithm enters.
  long q4 = 2 - (e.alpha + e.beta);
  Real ratio_root = sqrt(sqrt(Real::of(r1 / r2, bits)));
  Real bracket = pow_si(ratio_root, q4);

  Real s = mul_2si(const_pi(bits) * sqrt(Real::of(r1 * r2, bits)), 1);
  return bracket * bessel_i(BesselOrder::from_exponents(e), s, ctx);
}

double bessel_argument_bound(const EtaExponents& e, long n) {
  Rational p0 = e.p0();
  Rational r2 = make_rational(e.alpha + 2 * e.beta, 12) + Rational(2 * n);
  if (!(r2 > 0)) return 0.0;
  double best = 0.0;
  const double two_pi = 6.283185307179587;
  if (p0 > 0) {
    Rational arg = (p0 / 2) * r2;
    best = std::max(best, two_pi * std::sqrt(arg.get_d()));
  }
  Rational p1 = e.p1();
  if (p1 > 0) {
    Rational arg = p1 * r2;
    best = std::max(best, two_pi * std::sqrt(arg.get_d()));
  }
  return best;
}

}  // namespace hilb
