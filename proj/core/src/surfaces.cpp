#include "hilb/surfaces.hpp"

#include <algorithm>
#include <cmath>

#include "hilb/errors.hpp"
#include "hilb/specfun.hpp"

namespace hilb {

namespace {

constexpr const char* kChiNonneg = "chi(S) >= 0 violated";
constexpr const char* kSigmaLeChi = "sigma(S) <= chi(S) violated";

// base^{num/den} for positive base and den in {1,2,4,8}: iterated square
// roots raised to an exact integer power, avoiding exp/log entirely.
Real dyadic_pow(Real base, long num, long den) {
  while (den > 1) {
    base = sqrt(base);
    den /= 2;
  }
  return pow_si(base, num);
}

// Working precision wide enough to resolve a quantity of size
// e^{pi sqrt(rate * n)} multiplicatively.
long growth_bits(long requested, double rate, long n) {
  double s = 3.141592653589793 * std::sqrt(std::max(0.0, rate) * n);
  return PrecisionContext(requested, s).working_bits();
}

// 2^{e2} 3^{e3} M^{em} n^{en} exp(pi sqrt(g n / gd)), all exponents over
// the common dyadic denominator den.
Real main_term(long bits, long den, long e2, long e3, const Integer& M,
               long em, long n, long en, long g, long gd) {
  Real two = Real::of(2, bits);
  Real three = Real::of(3, bits);
  Real m = Real::of(M, bits);
  Real nn = Real::of(n, bits);
  Real arg = const_pi(bits) *
             sqrt(Real::of(make_rational(Integer(g) * n, Integer(gd)), bits));
  return dyadic_pow(two, e2, den) * dyadic_pow(three, e3, den) *
         dyadic_pow(m, em, den) * dyadic_pow(nn, en, den) * exp(arg);
}

}  // namespace

InvariantComputation euler_hilb_detail(const SurfaceHodge& s, long n,
                                       Method method,
                                       const ExactOptions& opts) {
  long chi = s.euler();
  if (n < 0) throw precondition_error("n >= 0 violated");
  if (method == Method::kExact && chi < 0) {
    throw precondition_error(kChiNonneg);
  }
  if (n == 0) return {Integer(1), 0};
  if (chi == 0) return {Integer(0), 0};
  if (method == Method::kSeries) {
    return {eta_product_series(-chi, 0, n).at(n), 0};
  }
  ExactResult r = exact_coefficient(EtaExponents{-chi, 0}, n, opts);
  return {r.value, r.report.max_k};
}

Integer euler_hilb(const SurfaceHodge& s, long n, Method method,
                   const ExactOptions& opts) {
  return euler_hilb_detail(s, n, method, opts).value;
}

InvariantComputation signature_hilb_detail(const SurfaceHodge& s, long n,
                                           Method method,
                                           const ExactOptions& opts) {
  long sigma = s.signature();
  long chi = s.euler();
  if (n < 0) throw precondition_error("n >= 0 violated");
  if (method == Method::kExact && sigma > chi) {
    throw precondition_error(kSigmaLeChi);
  }
  if (n == 0) return {Integer(1), 0};
  EtaExponents e{sigma, s.capital_lambda()};
  InvariantComputation out;
  if (method == Method::kSeries) {
    out.value = eta_product_series(e.alpha, e.beta, n).at(n);
  } else {
    ExactResult r = exact_coefficient(e, n, opts);
    out.value = r.value;
    out.max_k_used = r.report.max_k;
  }
  // sigma(Hilb^n) carries the alternating sign relative to the quotient's
  // plain q-expansion.
  if (n % 2 != 0) out.value = -out.value;
  return out;
}

Integer signature_hilb(const SurfaceHodge& s, long n, Method method,
                       const ExactOptions& opts) {
  return signature_hilb_detail(s, n, method, opts).value;
}

Real asymptotic_estimate(const EtaExponents& e, long n, long bits) {
  long a = e.alpha, b = e.beta;
  if (a + b > 0) throw precondition_error("alpha + beta <= 0 violated");
  if (n < 1) throw precondition_error("n >= 1 violated");
  if (a == 0 && b == 0) {
    throw unsupported_hypothesis_error(
        "alpha = beta = 0 has no growth to estimate");
  }
  if (a == 0) {
    // Series in q^2: odd coefficients vanish identically; even ones grow
    // like the swapped pure power at half the index.
    if (n % 2 != 0) return Real::zero(PrecisionContext(bits).working_bits());
    long m = n / 2;
    long wb = growth_bits(bits, -2.0 * b / 3.0, m);
    return main_term(wb, 4, 3 * b - 5, b - 1, Integer(-b), 1 - b, m, b - 3,
                     -2 * b, 3);
  }
  if (a < 0) {
    long wb = growth_bits(bits, -(2.0 * a + b) / 3.0, n);
    return main_term(wb, 4, 2 * (2 * a + b - 3), a + b - 1,
                     Integer(-(2 * a + b)), -a - b + 1, n, a + b - 3,
                     -(2 * a + b), 3);
  }
  // a > 0: the growth switches cusps and the sign alternates with n.
  long wb = growth_bits(bits, -(a + 2.0 * b) / 6.0, n);
  Real v = main_term(wb, 4, 3 * a + 3 * b - 7, a + b - 1,
                     Integer(-(a + 2 * b)), 1 - a - b, n, a + b - 3,
                     -(a + 2 * b), 6);
  return (n % 2 == 0) ? v : -v;
}

Real surface_asymptotics(const SurfaceHodge& s, SurfaceInvariant inv, long n,
                         long bits) {
  long chi = s.euler();
  long sigma = s.signature();
  if (n < 1) throw precondition_error("n >= 1 violated");

  if (inv == SurfaceInvariant::kEuler) {
    if (chi == 0) return Real::zero(PrecisionContext(bits).working_bits());
    if (chi < 0) {
      throw unsupported_hypothesis_error(
          "no Euler asymptotic case applies for chi(S) < 0");
    }
    long wb = growth_bits(bits, 2.0 * chi / 3.0, n);
    return main_term(wb, 4, -3 * chi - 5, -chi - 1, Integer(chi), chi + 1, n,
                     -chi - 3, 2 * chi, 3);
  }

  if (sigma > chi) throw unsupported_hypothesis_error(kSigmaLeChi);
  if (sigma == 0 && chi == 0) {
    return Real::zero(PrecisionContext(bits).working_bits());
  }
  if (sigma < 0) {
    long wb = growth_bits(bits, (chi - 3.0 * sigma) / 6.0, n);
    Real v = main_term(wb, 8, 7 * sigma - 3 * chi - 14, sigma - chi - 2,
                       Integer(chi - 3 * sigma), chi - sigma + 2, n,
                       sigma - chi - 6, chi - 3 * sigma, 6);
    return (n % 2 == 0) ? v : -v;
  }
  if (sigma > 0) {
    long wb = growth_bits(bits, chi / 6.0, n);
    return main_term(wb, 8, 3 * sigma - 3 * chi - 14, sigma - chi - 2,
                     Integer(chi), chi - sigma + 2, n, sigma - chi - 6, chi,
                     6);
  }
  // sigma = 0, chi > 0: nonzero only at even index, estimated at half of it.
  if (n % 2 != 0) return Real::zero(PrecisionContext(bits).working_bits());
  long m = n / 2;
  long wb = growth_bits(bits, chi / 3.0, m);
  return main_term(wb, 8, 4 * (-chi - 3), -chi - 2, Integer(chi), 2 + chi, m,
                   -chi - 6, chi, 3);
}

EquidistributionReport equidistribution_report(const SurfaceHodge& s,
                                               const std::vector<long>& ns) {
  long chi = s.euler();
  long sigma = s.signature();
  if (chi < sigma) throw unsupported_hypothesis_error(kSigmaLeChi);
  if (ns.empty()) throw precondition_error("nonempty n list violated");
  if (*std::min_element(ns.begin(), ns.end()) < 0) {
    throw precondition_error("n >= 0 violated");
  }
  long order = *std::max_element(ns.begin(), ns.end());

  ParitySums ps = parity_sums(s, order);
  ThetaTables th = theta_ratios(ps);

  EquidistributionReport rep;
  rep.surface = s;
  rep.ns = ns;
  for (long n : ns) {
    size_t un = static_cast<size_t>(n);
    for (int r = 0; r < 2; ++r) rep.theta_b[r].push_back(th.theta_b[r][un]);
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) {
        rep.theta_c[r1][r2].push_back(th.theta_c[r1][r2][un]);
      }
    }
  }

  long cs = chi + sigma;
  Rational half = make_rational(1, 2);
  if (cs > 0) {
    rep.limit_b = {half, half};
  } else if (cs == 0) {
    rep.limit_b = {Rational(1), Rational(0)};
  } else {
    rep.limit_b = {half, -half};
  }
  if (s.h10 > 0) {
    Rational q = make_rational(1, 4);
    rep.limit_c = {{{q, -q}, {-q, q}}};
  } else {
    rep.limit_c = {{{rep.limit_b[0], Rational(0)},
                    {Rational(0), rep.limit_b[1]}}};
  }
  return rep;
}

}  // namespace hilb
