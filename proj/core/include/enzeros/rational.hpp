#pragma once

/*
 * Exact arbitrary-precision integers and rationals, backed by GMP.
 *
 * Rationals are kept canonical at all times: lowest terms, denominator
 * positive.  Every helper here either preserves canonicity or restores
 * it before returning.
 */

#include <gmpxx.h>

#include <string>

namespace enz {

using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const Int& num, const Int& den);

// Accepts "a", "a/b", and decimal literals like "-0.125".
Rational parse_rational(const std::string& text);

Rational rational_pow(const Rational& base, unsigned long exponent);

inline Rational rational_abs(const Rational& x) { return abs(x); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Largest dyadic k/2^bits that is <= x.
Rational floor_to_dyadic(const Rational& x, unsigned bits);
// Smallest dyadic k/2^bits that is >= x.
Rational ceil_to_dyadic(const Rational& x, unsigned bits);

// Dyadic s with s^2 <= x, within 2^-bits of sqrt(x).  Requires x >= 0.
Rational sqrt_lower(const Rational& x, unsigned bits);
// Dyadic s with s^2 >= x, within 2^-bits of sqrt(x).  Requires x >= 0.
Rational sqrt_upper(const Rational& x, unsigned bits);

// 2^-bits as an exact rational.
Rational pow2_inverse(unsigned bits);

// Decimal rendering with `digits` fractional digits, rounded toward
// -infinity / +infinity so a printed [lo, hi] pair still brackets x.
std::string decimal_lower(const Rational& x, unsigned digits);
std::string decimal_upper(const Rational& x, unsigned digits);

// "num/den" (or just "num" for integers).
std::string to_fraction_string(const Rational& x);

}  // namespace enz
