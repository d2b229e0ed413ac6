#pragma once

// Binary floating values with explicit error accounting.
//
// A BigFloat stands for some real x with |x - m*2^e| <= err*2^e, where m is
// the mantissa, e the exponent and err a non-negative integer count of units
// in the last place. Every operation that rounds widens err accordingly, so
// the radius is always a rigorous bound for the operations defined here.

#include <string>

#include "wz/numbers.hpp"

namespace wz {

class BigFloat {
 public:
  BigFloat() = default;
  BigFloat(Integer mantissa, long exponent, long precision, Integer error_ulps = 0);

  static BigFloat from_rational(const Rational& value, long precision_bits);

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  long precision() const { return precision_; }
  const Integer& error_ulps() const { return error_; }

  /// Exact value of m*2^e.
  Rational center() const;
  /// Exact upper bound on |x - center()|.
  Rational radius() const;
  bool is_exact() const { return error_ == 0; }

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat mul(const Rational& factor) const;
  BigFloat div(const Rational& divisor) const;
  BigFloat square() const { return *this * *this; }
  /// Widens the radius by `bound` (used for truncation errors of series).
  BigFloat widened(const Rational& bound) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);

  double to_double() const;
  /// Center rounded to `digits` decimals after the point.
  std::string to_decimal(int digits) const;

 private:
  void round_to_precision();

  Integer mantissa_ = 0;
  long exponent_ = 0;
  long precision_ = 64;
  Integer error_ = 0;
};

enum class Ordering3 { Less, Greater, Indistinguishable };

/// Less / Greater only when the whole uncertainty interval of a-b lies
/// beyond -tolerance / +tolerance; otherwise Indistinguishable.
Ordering3 compare(const BigFloat& a, const BigFloat& b, const Rational& tolerance);

/// Bits needed to represent `digits` decimal digits.
long digits_to_bits(long digits);

/// 10^-digits as an exact rational.
Rational decimal_tolerance(long digits);

/// floor(sqrt(a)) by Newton iteration, confirmed by squaring.
Integer isqrt(const Integer& a);

/// sqrt(x) with |result^2 - x| < 10^-digits. Throws DomainError for x < 0.
BigFloat sqrt_rational(const Rational& x, long digits);

/// pi with radius < 10^-digits (Chudnovsky series). The first request at a
/// given precision is cross-checked against Machin's arctangent formula.
BigFloat pi_approx(long digits);

BigFloat pi_chudnovsky(long digits);
BigFloat pi_machin(long digits);

}  // namespace wz
