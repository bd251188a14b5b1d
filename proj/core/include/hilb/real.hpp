#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "hilb/rational.hpp"

namespace hilb {

// Mantissa size governing a whole computation. Every derived Real carries
// working_bits() of precision and every primitive is correctly rounded at
// it (MPFR round-to-nearest), so a fixed context reproduces results
// bit-for-bit on any platform.
class PrecisionContext {
 public:
  static constexpr long kMinBits = 53;

  explicit PrecisionContext(long requested_bits = 128)
      : bits_(std::max(requested_bits, kMinBits)) {}

  // Sizing for a run whose largest Bessel argument is s_max: the final
  // value is of order e^{s_max} and must be resolved to an absolute margin
  // well below 1, so the mantissa absorbs s_max*log2(e) bits of dynamic
  // range plus slack on top of the requested accuracy.
  PrecisionContext(long requested_bits, double s_max);

  long working_bits() const { return bits_; }

 private:
  long bits_;
};

// Value-semantics wrapper over mpfr_t. Each value knows its precision;
// binary operations round to the wider operand's precision.
class Real {
 public:
  Real() { mpfr_init2(v_, PrecisionContext::kMinBits); mpfr_set_zero(v_, 1); }
  ~Real() { mpfr_clear(v_); }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, PrecisionContext::kMinBits);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  static Real zero(long bits);
  static Real of(long v, long bits);
  static Real of(const Integer& v, long bits);
  static Real of(const Rational& v, long bits);  // one correct rounding
  static Real of_double(double v, long bits);

  long bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr mp() const { return v_; }
  mpfr_ptr mp() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Plain decimal string (never scientific notation) carrying enough digits
  // that parsing it back at the same precision recovers the identical value.
  std::string decimal() const;

  // Decimal truncated toward zero to `decimals` fractional digits; a
  // strictly negative value keeps its sign even if all printed digits are
  // zero (mirrors table entries like "-0.0000").
  std::string fixed_truncated(int decimals) const;

  // Shortest-ish human rendering with the given significant digit count.
  std::string sci(int significant_digits) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  struct uninit_tag {};
  Real(long bits, uninit_tag) { mpfr_init2(v_, bits); }

  static Real binop(const Real& a, const Real& b,
                    int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t));
  static Real unop(const Real& a, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t));

  friend Real sqrt(const Real&);
  friend Real exp(const Real&);
  friend Real log(const Real&);
  friend Real cos(const Real&);
  friend Real sin(const Real&);
  friend Real cosh(const Real&);
  friend Real sinh(const Real&);
  friend Real abs(const Real&);
  friend Real pow(const Real&, const Real&);
  friend Real pow_si(const Real&, long);
  friend Real mul_2si(const Real&, long);
  friend Real const_pi(long bits);
  friend long exponent_of(const Real&);
  friend Integer round_nearest_integer(const Real&);
  friend Real distance_to_nearest_integer(const Real&);
  friend Real parse_real(const std::string&, long bits);

  mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real abs(const Real& x);
Real pow(const Real& base, const Real& expo);
Real pow_si(const Real& base, long e);
// x * 2^e, exact.
Real mul_2si(const Real& x, long e);
Real const_pi(long bits);
// Binary exponent: x = m * 2^(exponent_of(x)) with m in [1/2, 1). Zero maps
// to a very negative sentinel so magnitude comparisons remain valid.
long exponent_of(const Real& x);
Integer round_nearest_integer(const Real& x);
Real distance_to_nearest_integer(const Real& x);
Real parse_real(const std::string& s, long bits);

// Rectangular complex value used by the exponential-sum assembly; only
// addition and real scaling arise there.
struct Complex {
  Real re;
  Real im;

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex{a.re * s, a.im * s};
  }
};

}  // namespace hilb
