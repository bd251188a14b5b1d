#include "hilb/rademacher.hpp"

#include <numeric>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hilb/errors.hpp"
#include "hilb/qseries.hpp"
#include "hilb/specfun.hpp"

namespace hilb {

long inverse_neg_mod(long h, long k, InverseConvention conv) {
  if (k < 1) throw precondition_error("k >= 1 violated in inverse_neg_mod");
  if (h < 0 || h >= k) {
    throw precondition_error("0 <= h < k violated in inverse_neg_mod");
  }
  if (k == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), Integer(h).get_mpz_t(),
                 Integer(k).get_mpz_t()) == 0) {
    throw precondition_error("gcd(h,k) = 1 violated in inverse_neg_mod");
  }
  long hp = (k - inv.get_si()) % k;
  // For odd k the value is only meaningful mod 2k and both parities occur
  // among representatives; the even choice is the one under which the odd-
  // denominator sums come out real. For even k the parity is forced, so
  // the convention has nothing to choose.
  if (conv == InverseConvention::kEven && k % 2 == 1 && hp % 2 == 1) {
    hp += k;
  }
  return hp;
}

namespace {

// exp(pi i e) for exact rational e, at `bits` precision. Quarter-turn
// exponents come out exact; everything else pays one argument rounding,
// harmless because |d(cos)| <= |d(theta)|.
Complex unit_phase_value(const Rational& e, long bits) {
  Rational r = rational_mod(e, 2);
  if (r.get_den() == 1 || r.get_den() == 2) {
    Rational twice = r * 2;  // integer: 0..3 mod 4
    long q = static_cast<long>(mpz_fdiv_ui(twice.get_num_mpz_t(), 4));
    switch (q) {
      case 0: return {Real::of(1, bits), Real::zero(bits)};
      case 1: return {Real::zero(bits), Real::of(1, bits)};
      case 2: return {Real::of(-1, bits), Real::zero(bits)};
      default: return {Real::zero(bits), Real::of(-1, bits)};
    }
  }
  Real theta = const_pi(bits + 32) * Real::of(r, bits + 32);
  Complex out{cos(theta), sin(theta)};
  return out;
}

// Per-residue data reused across seed indices j for a fixed denominator:
// the j-independent exponent omega_e(h) - 2nh/k and the inverse h'.
struct ResiduePhase {
  Rational base;
  long h_prime;
};

std::vector<ResiduePhase> residue_phases(const EtaExponents& e, long k,
                                         long n, InverseConvention conv) {
  std::vector<ResiduePhase> table;
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && k > 1) continue;
    Rational ex = omega(e.alpha, e.beta, h, static_cast<unsigned long>(k))
                      .exponent();
    ex += make_rational(-2 * n * h, k);
    table.push_back({rational_mod(ex, 2), inverse_neg_mod(h, k, conv)});
  }
  return table;
}

Complex exponential_sum(const std::vector<ResiduePhase>& table, long j,
                        long k, bool half_angle, long bits) {
  Complex acc{Real::zero(bits), Real::zero(bits)};
  for (const ResiduePhase& rp : table) {
    Rational ex = rp.base;
    ex += make_rational(rp.h_prime * j * (half_angle ? 1 : 2), k);
    acc += unit_phase_value(ex, bits);
  }
  return acc;
}

// k^{(twice_w)/2} for twice_w of either sign, exact-exponent route.
Real pow_half_integer(long k, long twice_w, long bits) {
  Real base = Real::of(k, bits);
  if (twice_w % 2 == 0) return pow_si(base, twice_w / 2);
  return pow_si(sqrt(base), twice_w);
}

const char* convention_name(InverseConvention c) {
  return c == InverseConvention::kCanonical ? "canonical" : "even";
}

}  // namespace

Complex kloosterman_a(const EtaExponents& e, long j, long k, long n,
                      const PrecisionContext& ctx) {
  if (k < 2 || k % 2 != 0) {
    throw precondition_error("even k >= 2 violated in kloosterman_a");
  }
  auto table = residue_phases(e, k, n, InverseConvention::kCanonical);
  return exponential_sum(table, j, k, /*half_angle=*/false,
                         ctx.working_bits());
}

Complex kloosterman_b(const EtaExponents& e, long j, long k, long n,
                      const PrecisionContext& ctx, InverseConvention conv) {
  if (k < 1 || k % 2 != 1) {
    throw precondition_error("odd k >= 1 violated in kloosterman_b");
  }
  auto table = residue_phases(e, k, n, conv);
  return exponential_sum(table, j, k, /*half_angle=*/true,
                         ctx.working_bits());
}

Seeds seeds_for(const EtaExponents& e) {
  Seeds s;
  long nd = e.seed_count_direct();
  if (nd > 0) {
    s.direct = eta_product_series(e.alpha, e.beta, nd - 1).c;
  }
  long ns = e.seed_count_swapped();
  if (ns > 0) {
    s.swapped = eta_product_series(e.beta, e.alpha, ns - 1).c;
  }
  return s;
}

std::string RademacherReport::json() const {
  nlohmann::json doc;
  doc["alpha"] = alpha;
  doc["beta"] = beta;
  doc["n"] = n;
  doc["N"] = max_k;
  doc["precision_bits"] = precision_bits;
  doc["convention"] = convention_name(convention);
  doc["value"] = value.decimal();
  nlohmann::json arr = nlohmann::json::array();
  for (const TermContribution& t : terms) {
    arr.push_back({{"parity", t.parity},
                   {"j", t.j},
                   {"k", t.k},
                   {"contribution", t.contribution.decimal()}});
  }
  doc["terms"] = std::move(arr);
  return doc.dump();
}

RademacherReport truncated_sum(const EtaExponents& e, long n, long max_k,
                               const PrecisionContext& ctx,
                               InverseConvention conv, const Seeds& seeds) {
  if (e.alpha + e.beta > 0) {
    throw precondition_error("alpha + beta <= 0 violated");
  }
  if (!(Rational(n) > e.p0())) {
    throw precondition_error("n > p0 violated");
  }
  if (max_k < 1) throw precondition_error("max_k >= 1 violated");

  long wb = ctx.working_bits();
  RademacherReport rep;
  rep.alpha = e.alpha;
  rep.beta = e.beta;
  rep.n = n;
  rep.max_k = max_k;
  rep.precision_bits = wb;
  rep.convention = conv;

  Real two_pi = mul_2si(const_pi(wb), 1);
  Complex total{Real::zero(wb), Real::zero(wb)};

  long nd = e.seed_count_direct();
  long ns = e.seed_count_swapped();

  for (long k = 2; k <= max_k; k += 2) {
    std::optional<std::vector<ResiduePhase>> table;
    for (long j = 0; j < nd; ++j) {
      const Integer& seed = seeds.direct.at(static_cast<size_t>(j));
      if (seed == 0) continue;
      if (!table) table = residue_phases(e, k, n, conv);
      Complex a = exponential_sum(*table, j, k, false, wb);
      Real factor = Real::of(seed, wb) *
                    pow_half_integer(k, -(e.alpha + e.beta), wb) *
                    l_star(0, e, Rational(j), k, n, ctx);
      Complex term = a * factor;
      total += term;
      rep.terms.push_back({0, j, k, term.re * two_pi});
    }
  }

  Real two_pow = pow_half_integer(2, -e.beta, wb);
  for (long k = 1; k <= max_k; k += 2) {
    std::optional<std::vector<ResiduePhase>> table;
    for (long j = 0; j < ns; ++j) {
      const Integer& seed = seeds.swapped.at(static_cast<size_t>(j));
      if (seed == 0) continue;
      if (!table) table = residue_phases(e, k, n, conv);
      Complex b = exponential_sum(*table, j, k, true, wb);
      Real factor = Real::of(seed, wb) * two_pow *
                    pow_half_integer(k, -(e.alpha + e.beta), wb) *
                    l_star(1, e, Rational(j), k, n, ctx);
      Complex term = b * factor;
      total += term;
      rep.terms.push_back({1, j, k, term.re * two_pi});
    }
  }

  Real re = total.re * two_pi;
  Real im = total.im * two_pi;
  rep.value = re;

  Real tol = mul_2si(Real::of(1, wb), -wb / 2);
  Real scale = abs(re);
  if (scale < Real::of(1, wb)) scale = Real::of(1, wb);
  if (abs(im) > tol * scale) {
    throw nonconvergence_error(
        "imaginary part exceeds realness tolerance (inverse convention or "
        "precision inconsistent with the sum)",
        rep.json());
  }
  return rep;
}

PrecisionContext suggested_context(const EtaExponents& e, long n,
                                   long requested_bits) {
  return PrecisionContext(requested_bits, bessel_argument_bound(e, n));
}

ExactResult exact_coefficient(const EtaExponents& e, long n,
                              const ExactOptions& opts) {
  PrecisionContext ctx = suggested_context(e, n, opts.requested_bits);
  Seeds seeds = seeds_for(e);
  long wb = ctx.working_bits();
  Real margin = Real::of_double(opts.round_margin, wb);

  std::optional<Real> prev;
  std::optional<RademacherReport> last;
  for (long cap = opts.initial_max_k; cap <= opts.limit_max_k; cap *= 2) {
    RademacherReport rep =
        truncated_sum(e, n, cap, ctx, opts.convention, seeds);
    if (prev) {
      Real step = abs(rep.value - *prev);
      Real drift = distance_to_nearest_integer(rep.value);
      if (step < margin && drift < margin) {
        Integer v = round_nearest_integer(rep.value);
        return ExactResult{v, std::move(rep)};
      }
    }
    prev = rep.value;
    last = std::move(rep);
  }
  throw nonconvergence_error(
      "truncated sums did not stabilize to an integer by the max_k cap",
      last ? last->json() : "{}");
}

}  // namespace hilb
