#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace boxhunt {

// Exact arithmetic for the rational engine. Non-visit entries are products of
// hundreds of factors (p-1)/p and their reduced denominators overflow any
// fixed-width integer long before m = 100, so this rides on GMP.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// "num/den" (or just "num" for integers), canonical lowest terms.
inline std::string fraction_string(const Rational& q) { return q.get_str(); }

// q^e, exact: integer powers of numerator and denominator.
inline Rational ipow(const Rational& q, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace boxhunt
