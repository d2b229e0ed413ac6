#include "wz/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "wz/errors.hpp"

namespace wz {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Rational pow2(long e) {
  Integer p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
  return Rational(Integer(1), p);
}

Integer shl(const Integer& x, long bits) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(bits));
  return r;
}

}  // namespace

BigFloat::BigFloat(Integer mantissa, long exponent, long precision, Integer error_ulps)
    : mantissa_(std::move(mantissa)),
      exponent_(exponent),
      precision_(std::max(precision, 8L)),
      error_(abs_int(error_ulps)) {
  round_to_precision();
}

void BigFloat::round_to_precision() {
  long excess = bit_length(mantissa_) - precision_;
  if (excess <= 0) return;
  Integer q;
  mpz_tdiv_q_2exp(q.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<unsigned long>(excess));
  bool inexact = shl(q, excess) != mantissa_;
  Integer e;
  mpz_cdiv_q_2exp(e.get_mpz_t(), error_.get_mpz_t(), static_cast<unsigned long>(excess));
  mantissa_ = q;
  error_ = e + (inexact ? 1 : 0);
  exponent_ += excess;
}

BigFloat BigFloat::from_rational(const Rational& value, long precision_bits) {
  if (value == 0) return BigFloat(0, 0, precision_bits);
  long shift = precision_bits + 2 - (bit_length(value.get_num()) - bit_length(value.get_den()));
  Integer scaled_num = value.get_num();
  Integer scaled_den = value.get_den();
  if (shift >= 0)
    scaled_num = shl(scaled_num, shift);
  else
    scaled_den = shl(scaled_den, -shift);
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  return BigFloat(q, -shift, precision_bits, r == 0 ? 0 : 1);
}

Rational BigFloat::center() const { return Rational(mantissa_) * pow2(exponent_); }

Rational BigFloat::radius() const { return Rational(error_) * pow2(exponent_); }

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

BigFloat BigFloat::abs() const { return mantissa_ < 0 ? -*this : *this; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  long e = std::min(a.exponent_, b.exponent_);
  Integer m = shl(a.mantissa_, a.exponent_ - e) + shl(b.mantissa_, b.exponent_ - e);
  Integer err = shl(a.error_, a.exponent_ - e) + shl(b.error_, b.exponent_ - e);
  return BigFloat(m, e, std::min(a.precision_, b.precision_), err);
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  Integer m = a.mantissa_ * b.mantissa_;
  Integer err = abs_int(a.mantissa_) * b.error_ + abs_int(b.mantissa_) * a.error_ + a.error_ * b.error_;
  return BigFloat(m, a.exponent_ + b.exponent_, std::min(a.precision_, b.precision_), err);
}

BigFloat BigFloat::mul(const Rational& factor) const {
  // Pad with `precision_` guard bits so the truncating division keeps full precision.
  long pad = precision_ + bit_length(factor.get_den());
  Integer num = shl(mantissa_ * factor.get_num(), pad);
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), factor.get_den_mpz_t());
  Integer err_num = shl(error_ * abs_int(factor.get_num()), pad);
  Integer err;
  mpz_cdiv_q(err.get_mpz_t(), err_num.get_mpz_t(), factor.get_den_mpz_t());
  if (r != 0) err += 1;
  return BigFloat(q, exponent_ - pad, precision_, err);
}

BigFloat BigFloat::div(const Rational& divisor) const {
  if (divisor == 0) throw DivisionByZero();
  return mul(Rational(1) / divisor);
}

BigFloat BigFloat::widened(const Rational& bound) const {
  Rational units = wz::abs(bound) / pow2(exponent_);
  BigFloat r = *this;
  r.error_ += wz::ceil(units);
  return r;
}

double BigFloat::to_double() const {
  return std::ldexp(mpz_get_d(mantissa_.get_mpz_t()), static_cast<int>(exponent_));
}

std::string BigFloat::to_decimal(int digits) const {
  Rational scaled = center();
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  scaled *= p10;
  Integer rounded = wz::floor(scaled + Rational(1, 2));
  bool negative = rounded < 0;
  std::string s = abs_int(rounded).get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
  return negative ? "-" + s : s;
}

Ordering3 compare(const BigFloat& a, const BigFloat& b, const Rational& tolerance) {
  Rational d = a.center() - b.center();
  Rational r = a.radius() + b.radius();
  if (d + r < -tolerance) return Ordering3::Less;
  if (d - r > tolerance) return Ordering3::Greater;
  return Ordering3::Indistinguishable;
}

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 1;
}

Rational decimal_tolerance(long digits) {
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(digits)));
  return digits >= 0 ? Rational(Integer(1), p10) : Rational(p10);
}

Integer isqrt(const Integer& a) {
  if (a < 0) throw DomainError("isqrt of a negative integer");
  if (a < 2) return a;
  Integer x = shl(Integer(1), (bit_length(a) + 1) / 2);  // x >= sqrt(a)
  while (true) {
    Integer y = (x + a / x) / 2;
    if (y >= x) break;
    x = y;
  }
  if (!(x * x <= a && (x + 1) * (x + 1) > a))
    throw std::logic_error("isqrt: Newton iteration failed the squaring check");
  return x;
}

BigFloat sqrt_rational(const Rational& x, long digits) {
  if (x < 0) throw DomainError("square root of a negative rational");
  if (x == 0) return BigFloat(0, 0, digits_to_bits(digits));
  long int_bits = std::max(0L, bit_length(x.get_num()) - bit_length(x.get_den()) + 1);
  long s = digits_to_bits(digits) + int_bits + 8;
  // sqrt(x) = sqrt(x * 4^s) * 2^-s
  Integer num = shl(x.get_num(), 2 * s);
  Integer a, rem;
  mpz_tdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  Integer root = isqrt(a);
  bool exact = rem == 0 && root * root == a;
  long precision = s + int_bits / 2 + 4;
  return BigFloat(root, -s, precision, exact ? 0 : 2);
}

}  // namespace wz
