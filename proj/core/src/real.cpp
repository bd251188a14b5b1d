#include "hilb/real.hpp"

#include <cmath>
#include <cstdlib>

#include "hilb/errors.hpp"

namespace hilb {

PrecisionContext::PrecisionContext(long requested_bits, double s_max)
    : bits_(std::max(requested_bits, kMinBits)) {
  if (s_max > 0) {
    long range = static_cast<long>(std::ceil(s_max * 1.4426950408889634)) + 64;
    bits_ = std::max(bits_, range);
  }
}

Real Real::zero(long bits) {
  Real r(bits, uninit_tag{});
  mpfr_set_zero(r.v_, 1);
  return r;
}

Real Real::of(long v, long bits) {
  Real r(bits, uninit_tag{});
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Integer& v, long bits) {
  Real r(bits, uninit_tag{});
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& v, long bits) {
  Real r(bits, uninit_tag{});
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of_double(double v, long bits) {
  Real r(bits, uninit_tag{});
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::binop(const Real& a, const Real& b,
                 int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r(std::max(a.bits(), b.bits()), uninit_tag{});
  f(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::unop(const Real& a, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r(a.bits(), uninit_tag{});
  f(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) { return Real::binop(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return Real::binop(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return Real::binop(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return Real::binop(a, b, mpfr_div); }
Real operator-(const Real& a) { return Real::unop(a, mpfr_neg); }

Real sqrt(const Real& x) { return Real::unop(x, mpfr_sqrt); }
Real exp(const Real& x) { return Real::unop(x, mpfr_exp); }
Real log(const Real& x) { return Real::unop(x, mpfr_log); }
Real cos(const Real& x) { return Real::unop(x, mpfr_cos); }
Real sin(const Real& x) { return Real::unop(x, mpfr_sin); }
Real cosh(const Real& x) { return Real::unop(x, mpfr_cosh); }
Real sinh(const Real& x) { return Real::unop(x, mpfr_sinh); }
Real abs(const Real& x) { return Real::unop(x, mpfr_abs); }
Real pow(const Real& base, const Real& expo) { return Real::binop(base, expo, mpfr_pow); }

Real pow_si(const Real& base, long e) {
  Real r(base.bits(), Real::uninit_tag{});
  mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
  return r;
}

Real mul_2si(const Real& x, long e) {
  Real r(x.bits(), Real::uninit_tag{});
  mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

Real const_pi(long bits) {
  Real r(bits, Real::uninit_tag{});
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

long exponent_of(const Real& x) {
  if (x.is_zero()) return mpfr_get_emin();
  return static_cast<long>(mpfr_get_exp(x.v_));
}

Integer round_nearest_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.v_, MPFR_RNDN);
  return z;
}

Real distance_to_nearest_integer(const Real& x) {
  Real nearest = Real::of(round_nearest_integer(x), x.bits());
  return abs(x - nearest);
}

Real parse_real(const std::string& s, long bits) {
  Real r(bits, Real::uninit_tag{});
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw precondition_error("unparseable real literal: " + s);
  }
  return r;
}

namespace {

// Splits mpfr_get_str output into (sign, digits) and places the decimal
// point per the returned exponent: value = +-0.digits * 10^exp.
std::string place_point(const std::string& raw, mpfr_exp_t exp) {
  std::string sign;
  std::string digits = raw;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits = digits.substr(1);
  }
  // Strip trailing zeros; they carry no information once the point is in.
  size_t last = digits.find_last_not_of('0');
  if (last == std::string::npos) return sign + "0";
  digits.resize(last + 1);

  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
  } else if (static_cast<size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(exp)) + "." +
          digits.substr(static_cast<size_t>(exp));
  }
  return sign + out;
}

}  // namespace

std::string Real::decimal() const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : "inf";
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
  std::string raw(s);
  mpfr_free_str(s);
  return place_point(raw, exp);
}

std::string Real::sci(int significant_digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : "inf";
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10,
                         static_cast<size_t>(significant_digits), v_,
                         MPFR_RNDN);
  std::string raw(s);
  mpfr_free_str(s);
  std::string sign;
  if (raw[0] == '-') {
    sign = "-";
    raw = raw.substr(1);
  }
  std::string mant = raw.substr(0, 1) + "." + raw.substr(1);
  return sign + mant + "e" + std::to_string(static_cast<long>(exp) - 1);
}

std::string Real::fixed_truncated(int decimals) const {
  // x * 10^decimals is exact in bits() + a few guard bits (the scale is a
  // small integer), so toward-zero extraction of the integer part is the
  // exact truncation of the underlying value.
  Real scale = Real::of(1, 64);
  mpfr_ui_pow_ui(scale.mp(), 10, static_cast<unsigned long>(decimals),
                 MPFR_RNDN);
  Real scaled(bits() + 64, uninit_tag{});
  mpfr_mul(scaled.mp(), v_, scale.mp(), MPFR_RNDN);
  Integer t;
  mpfr_get_z(t.get_mpz_t(), scaled.mp(), MPFR_RNDZ);

  bool negative = mpfr_sgn(v_) < 0;
  Integer mod;
  Integer div;
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  Integer att;
  mpz_abs(att.get_mpz_t(), t.get_mpz_t());
  mpz_fdiv_qr(div.get_mpz_t(), mod.get_mpz_t(), att.get_mpz_t(),
              base.get_mpz_t());
  std::string frac = mod.get_str();
  frac.insert(0, static_cast<size_t>(decimals) - frac.size(), '0');
  return (negative ? "-" : "") + div.get_str() + "." + frac;
}

}  // namespace hilb
