#pragma once

#include <gmpxx.h>

#include <string>

namespace a1scroll {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Least nonnegative residue of v modulo m (m > 0).
inline Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_floor(const Integer& v, long m) { return mod_floor(v, Integer(m)).get_si(); }

/// Integer power with nonnegative exponent.
inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace a1scroll
