#pragma once

#include <string>
#include <vector>

#include "hilb/eta_exponents.hpp"
#include "hilb/exactmath.hpp"
#include "hilb/real.hpp"

namespace hilb {

// Choice of representative for the inverse h' with h h' == -1 (mod k).
// The multiplier system of eta(2t) ties the odd-denominator exponential
// sums to h' through e^{pi i h' j / k}, where only h' mod 2k is
// determined; `kEven` picks the even representative in [0, 2k), which the
// transformation law singles out, and `kCanonical` keeps the least
// non-negative one in [0, k) for comparison runs.
enum class InverseConvention { kCanonical, kEven };

// h' as above. Requires gcd(h, k) = 1, k >= 1, 0 <= h < k.
long inverse_neg_mod(long h, long k, InverseConvention conv);

// Exponential sum over residues prime to k pairing the eta-quotient
// multiplier with e^{-2 pi i n h / k} e^{2 pi i h' j / k}; the even-
// denominator (parity 0) variant. j is an integer seed index, so only
// h' mod k enters and the inverse convention is immaterial here.
Complex kloosterman_a(const EtaExponents& e, long j, long k, long n,
                      const PrecisionContext& ctx);

// Odd-denominator (parity 1) variant: the j-carrying phase runs over
// e^{pi i h' j / k}, so the convention for h' mod 2k participates.
Complex kloosterman_b(const EtaExponents& e, long j, long k, long n,
                      const PrecisionContext& ctx, InverseConvention conv);

// Seed coefficients feeding the exact formula: direct[j] = a(alpha,beta;j)
// for j < p0 and swapped[j] = a(beta,alpha;j) for j < p1.
struct Seeds {
  std::vector<Integer> direct;
  std::vector<Integer> swapped;
};

Seeds seeds_for(const EtaExponents& e);

struct TermContribution {
  int parity;  // 0 = even denominators, 1 = odd
  long j;
  long k;
  Real contribution;
};

// One evaluation of the truncated exact formula, with enough metadata to
// reproduce it and the per-term breakdown in deterministic order (parity 0
// block then parity 1, ascending k, ascending j within k).
struct RademacherReport {
  long alpha = 0;
  long beta = 0;
  long n = 0;
  long max_k = 0;
  long precision_bits = 0;
  InverseConvention convention = InverseConvention::kEven;
  Real value;
  std::vector<TermContribution> terms;

  std::string json() const;
};

// Truncated exact formula for a(alpha,beta;n): both parity blocks summed
// over denominators k <= max_k. Requires alpha+beta <= 0 and n > p0. The
// assembled sum is a real number by conjugate symmetry of the h-sums; if
// its imaginary part exceeds 2^{-working_bits/2} relative to the real
// part, something upstream is inconsistent (wrong convention, precision
// too low) and the evaluation refuses to return a value.
RademacherReport truncated_sum(const EtaExponents& e, long n, long max_k,
                               const PrecisionContext& ctx,
                               InverseConvention conv, const Seeds& seeds);

struct ExactOptions {
  long requested_bits = 128;
  InverseConvention convention = InverseConvention::kEven;
  // Accept the nearest integer once consecutive truncations agree and sit
  // within this distance of it.
  double round_margin = 0.25;
  long initial_max_k = 8;
  long limit_max_k = 4096;
};

struct ExactResult {
  Integer value;
  RademacherReport report;  // the accepting evaluation
};

// Drives truncated_sum with doubling max_k until two consecutive
// evaluations agree within round_margin and the latest sits within
// round_margin of an integer; throws nonconvergence_error carrying the
// last report if limit_max_k is exhausted.
ExactResult exact_coefficient(const EtaExponents& e, long n,
                              const ExactOptions& opts = {});

// Working precision for (e; n): the requested bits widened so the largest
// Bessel term's magnitude cannot swamp the integer gap.
PrecisionContext suggested_context(const EtaExponents& e, long n,
                                   long requested_bits);

}  // namespace hilb
