// Exact arbitrary-precision integers and fractions used for every verdict in
// the library. Floating point never participates in a comparison; it may only
// appear in presentation code that is clearly labeled as such.
#pragma once

#include <gmpxx.h>

#include <string>

namespace opn {

using Int = mpz_class;
using Rational = mpq_class;

// num/den as a canonical fraction (reduced, denominator > 0, zero is 0/1).
// Throws std::domain_error when den == 0.
Rational make_rational(const Int& num, const Int& den);

inline Rational frac(long num, long den) { return make_rational(Int(num), Int(den)); }

// b^e for nonnegative machine exponents.
Int ipow(const Int& base, unsigned long exp);

std::string to_string(const Int& v);

// Always renders both parts: 2 -> "2/1".
std::string to_string(const Rational& v);

// Decimal integer with optional sign; '_' digit separators accepted between
// digits ("300_000"). Throws std::invalid_argument on malformed input.
Int parse_int(const std::string& text);

// "a/b" (or a bare integer), both parts arbitrary-precision decimal strings.
// Throws std::invalid_argument on malformed input, including b == 0.
Rational parse_rational(const std::string& text);

}  // namespace opn
