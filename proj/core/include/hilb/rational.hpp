#pragma once

#include <gmpxx.h>

#include <string>

namespace hilb {

// Exact arithmetic currency. mpq_class keeps values in lowest terms with a
// positive denominator as long as they are built through arithmetic or the
// helpers below, which canonicalize after raw construction.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

// floor(q) as an exact integer.
inline Integer rational_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// q reduced into [0, m) by subtracting integer multiples of m (m > 0).
inline Rational rational_mod(const Rational& q, long m) {
  Rational f = q / m;
  Rational r = q - Rational(rational_floor(f)) * m;
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hilb
