#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mouldkit {

// Canonical rational: gmp keeps gcd(num, den) = 1 and den > 0 after every
// arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Binomial coefficient as a rational.
Rational binomial(unsigned n, unsigned k);

}  // namespace mouldkit
