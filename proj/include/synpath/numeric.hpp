#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace synpath {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "3", "-7/2", "0.01", "1e-3", "2.5E+2". Decimal input is converted
// exactly, so parse_rational("0.1") == 1/10.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);
// Rounded decimal rendering with `digits` digits after the point.
std::string to_decimal(const Rational& value, int digits);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline Rational magnitude(const Rational& q) { return abs(q); }
inline double magnitude(double x) { return x < 0 ? -x : x; }

}  // namespace synpath
