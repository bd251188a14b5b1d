#pragma once

#include <string>
#include <vector>

#include "hilb/qseries.hpp"
#include "hilb/rademacher.hpp"
#include "hilb/surface.hpp"

namespace hilb {

// Route used to produce an integer invariant: the analytic formula rounded
// to the nearest integer, or the exact power-series expansion.
enum class Method { kExact, kSeries };

// Value plus the truncation point the adaptive formula settled at
// (0 when no truncated evaluation ran: series route or closed-form cases).
struct InvariantComputation {
  Integer value;
  long max_k_used = 0;
};

// chi(Hilb^n(S)). The analytic route requires 0 <= chi(S) < 24n; the
// series route has no restriction. chi(S) = 0 collapses the generating
// function to 1, so every n >= 1 maps to 0 without evaluating anything.
Integer euler_hilb(const SurfaceHodge& s, long n, Method method,
                   const ExactOptions& opts = {});
InvariantComputation euler_hilb_detail(const SurfaceHodge& s, long n,
                                       Method method,
                                       const ExactOptions& opts = {});

// sigma(Hilb^n(S)). The analytic route requires sigma(S) <= chi(S) < 24n;
// the series route has no restriction. The eta-quotient coefficient
// carries an alternating sign relative to the invariant, handled here.
Integer signature_hilb(const SurfaceHodge& s, long n, Method method,
                       const ExactOptions& opts = {});
InvariantComputation signature_hilb_detail(const SurfaceHodge& s, long n,
                                           Method method,
                                           const ExactOptions& opts = {});

// Leading-order growth of a(alpha,beta;n) for large n. Split by the sign
// of alpha because the dominant cusp switches: alpha < 0 keeps the growth
// on even denominators, alpha > 0 moves it to odd ones (with alternating
// sign), and alpha = 0 degenerates to a series in q^2 whose odd
// coefficients vanish identically (asked for an odd n, the estimate is
// exactly zero). alpha = beta = 0 has no growth to estimate and throws.
Real asymptotic_estimate(const EtaExponents& e, long n, long bits = 128);

enum class SurfaceInvariant { kEuler, kSignature };

// Closed-form main term for chi(Hilb^n) or sigma(Hilb^n), dispatching on
// the signs of chi and sigma. Unsupported corners (chi < sigma, or a
// combination outside the proven cases) throw unsupported_hypothesis_error;
// identically-zero families return an exact zero.
Real surface_asymptotics(const SurfaceHodge& s, SurfaceInvariant inv, long n,
                         long bits = 128);

// Snapshot of how the parity proportions Theta^r(n) and Theta^{r1,r2}(n)
// approach their limits for one surface. Requires chi(S) >= sigma(S) so
// the limits exist. Entries are exact rationals where defined.
struct EquidistributionReport {
  SurfaceHodge surface;
  std::vector<long> ns;
  // theta_b[r][i] for n = ns[i]; empty optional where the normalizer is 0.
  std::array<std::vector<std::optional<Rational>>, 2> theta_b;
  std::array<std::array<std::vector<std::optional<Rational>>, 2>, 2> theta_c;
  // Predicted limits: +-1/2 pattern for theta_b, +-1/4 for theta_c, with
  // the sign pattern determined by sign(chi+sigma) and h10.
  std::array<Rational, 2> limit_b;
  std::array<std::array<Rational, 2>, 2> limit_c;
};

EquidistributionReport equidistribution_report(const SurfaceHodge& s,
                                               const std::vector<long>& ns);

}  // namespace hilb
