#pragma once

#include "hilb/eta_exponents.hpp"
#include "hilb/rational.hpp"
#include "hilb/real.hpp"

namespace hilb {

// Orders of the Bessel functions arising here are half-integers
// v = 1 - (alpha+beta)/2, tracked exactly as twice their value.
struct BesselOrder {
  long twice_v;  // v = twice_v / 2

  static BesselOrder from_exponents(const EtaExponents& e) {
    return BesselOrder{2 - (e.alpha + e.beta)};
  }
};

// Gamma(x) for positive half-integral x given as twice_x = 2x. Integral x
// uses the factorial; odd twice_x uses the double-factorial reduction to
// Gamma(1/2) = sqrt(pi).
Real gamma_half_integer(long twice_x, long bits);

// Modified Bessel function of the first kind, I_v(x), for v a positive
// half-integer and x > 0, by the ascending series
//   I_v(x) = sum_{m>=0} (x/2)^{v+2m} / (m! Gamma(v+m+1)).
// All terms are positive so the truncation error is bounded by the tail's
// geometric envelope; summation stops once a term falls below the running
// sum by the full working precision.
Real bessel_i(BesselOrder v, const Real& x, const PrecisionContext& ctx);

// Arguments r1 (k-local, per parity and seed index j) and r2 (global) of
// the Bessel factor. Exact rationals; the preconditions r1 > 0, r2 > 0 are
// where the hypotheses alpha+beta <= 0 and n > p0 actually bite, so the
// error messages name whichever bound failed.
Rational l_star_r1(int parity, const EtaExponents& e, const Rational& j,
                   long k);
Rational l_star_r2(const EtaExponents& e, long n);

// L*(parity, j, k; n) = (r1/r2)^{e1} * I_v(2 pi sqrt(r1 r2)) with
// e1 = (2 - (alpha+beta))/4 and v = 1 - (alpha+beta)/2.
Real l_star(int parity, const EtaExponents& e, const Rational& j, long k,
            long n, const PrecisionContext& ctx);

// Largest Bessel argument 2 pi sqrt(r1 r2) over the truncated sum for
// (e; n); drives automatic precision sizing.
double bessel_argument_bound(const EtaExponents& e, long n);

}  // namespace hilb
