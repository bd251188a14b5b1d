#pragma once

#include "hilb/rational.hpp"

namespace hilb {

// Exponent pair (alpha, beta) of the quotient
//   F(q) = q^{p0} eta(tau)^alpha eta(2 tau)^beta
//        = prod_{m>=1} (1-q^m)^alpha (1-q^{2m})^beta,
// whose q-expansion coefficients a(alpha,beta;n) the library computes.
// p0 = -(alpha+2beta)/24 is the order of the pole at the cusp 0-class and
// p1 = -(2alpha+beta)/24 the one at the other cusp; both appear as the
// ranges of the seed sums in the exact formula.
struct EtaExponents {
  long alpha = 0;
  long beta = 0;

  Rational p0() const { return make_rational(-(alpha + 2 * beta), 24); }
  Rational p1() const { return make_rational(-(2 * alpha + beta), 24); }

  // Number of seed coefficients a(alpha,beta;j), j < p0, feeding the
  // even-denominator half of the sum: ceil(p0) clipped at zero.
  long seed_count_direct() const;
  // Seeds a(beta,alpha;j), j < p1, feeding the odd-denominator half.
  long seed_count_swapped() const;

  EtaExponents swapped() const { return EtaExponents{beta, alpha}; }

  friend bool operator==(const EtaExponents&, const EtaExponents&) = default;
};

}  // namespace hilb
