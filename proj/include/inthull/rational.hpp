#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace inthull {

using Integer = mpz_class;
// mpq_class is kept canonical (den > 0, gcd(num, den) = 1) by every
// constructor in this library; make_rational is the only way to build one
// from a separate numerator and denominator.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);
Integer abs(const Integer& z);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Accepts "[+-]digits" or "[+-]digits/digits" with a nonzero denominator.
// Throws Error{Errc::Parse} on anything else, including decimal notation.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Fixed-point rendering with the given number of fractional digits, rounded
// half away from zero. Exact: never goes through floating point.
std::string to_decimal(const Rational& q, unsigned digits);

double to_double(const Rational& q);
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace inthull
