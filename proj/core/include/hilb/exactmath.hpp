#pragma once

#include "hilb/rational.hpp"

namespace hilb {

// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 elsewhere.
Rational sawtooth(const Rational& x);

// Dedekind sum s(h,k) = sum_{r=1}^{k-1} ((r/k)) ((h r / k)), evaluated by the
// O(k) defining sum in exact integer arithmetic. h may be any integer and
// need not be coprime to k (the multiplier below needs s(2h,k) with k even);
// s(h,k) = s(h mod k, k). Requires k >= 1.
Rational dedekind_sum(long h, unsigned long k);

// The complex number exp(pi i e) represented by its exact rational exponent
// e, kept reduced into [0,2). Multiplication adds exponents mod 2, so no
// trigonometric rounding accumulates until a final evaluation.
class UnitPhase {
 public:
  UnitPhase() : e_(0) {}
  explicit UnitPhase(const Rational& e) : e_(rational_mod(e, 2)) {}

  const Rational& exponent() const { return e_; }

  UnitPhase& operator*=(const UnitPhase& o) {
    e_ = rational_mod(e_ + o.e_, 2);
    return *this;
  }
  friend UnitPhase operator*(UnitPhase a, const UnitPhase& b) {
    a *= b;
    return a;
  }
  // Complex conjugate: exponent negated mod 2.
  UnitPhase conj() const { return UnitPhase(-e_); }

  friend bool operator==(const UnitPhase& a, const UnitPhase& b) {
    return a.e_ == b.e_;
  }

 private:
  Rational e_;  // in [0, 2)
};

// Transformation multiplier of the eta quotient on Gamma_0(2):
// omega_{alpha,beta}(h,k) = exp(-pi i (alpha s(h,k) + beta s(2h,k))).
// Requires 0 <= h < k and gcd(h,k) = 1.
UnitPhase omega(long alpha, long beta, long h, unsigned long k);

}  // namespace hilb
