#pragma once

// Exact integers and rationals. Both are backed by GMP; mpq_class keeps
// itself canonical (den > 0, gcd(num, den) = 1) after every operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den. Throws DivisionByZero when den == 0.
Rational rational_normalize(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" (decimal digits only).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational abs(const Rational& x);
Rational pow(const Rational& base, long exponent);

/// Rising factorial x(x+1)...(x+n-1); 1 for n == 0.
Rational rising_factorial(const Rational& x, long n);

/// Number of bits of |x|; 0 for x == 0.
long bit_length(const Integer& x);

}  // namespace wz
