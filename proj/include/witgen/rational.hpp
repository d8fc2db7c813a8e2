#pragma once

#include <gmpxx.h>

#include <string>

#include "witgen/errors.hpp"

namespace witgen {

// Exact scalars. mpq_class keeps every value canonical (gcd(num,den) = 1,
// den > 0) provided construction goes through the helpers below; all
// arithmetic preserves canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(errc::domain, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p" with optional sign; q must be nonzero.
Rational parse_rational(const std::string& text);

// Always "p/q", q > 0, even when q = 1.
std::string format_rational(const Rational& r);

inline bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

}  // namespace witgen
