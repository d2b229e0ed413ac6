#include "doctest.h"
#include "wz/bigfloat.hpp"
#include "wz/errors.hpp"
#include "wz/numbers.hpp"

using namespace wz;

TEST_CASE("rationals parse, print and normalize") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-27/512") == Rational(-27, 512));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(rational_normalize(6, -4) == Rational(-3, 2));
  CHECK(rational_normalize(6, -4).get_den() == 2);
  CHECK_THROWS_AS(rational_normalize(1, 0), DivisionByZero);
  CHECK_THROWS(parse_rational("1/"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("integer helpers") {
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(is_integer(rational_normalize(8, 4)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(rising_factorial(Rational(-2), 4) == 0);
  CHECK(rising_factorial(Rational(5), 0) == 1);
  CHECK(bit_length(Integer(255)) == 8);
  CHECK(bit_length(Integer(0)) == 0);
}

TEST_CASE("BigFloat radius bounds the true value") {
  BigFloat third = BigFloat::from_rational(Rational(1, 3), 128);
  CHECK(abs(third.center() - Rational(1, 3)) <= third.radius());
  BigFloat prod = third * BigFloat::from_rational(Rational(3), 128);
  CHECK(abs(prod.center() - 1) <= prod.radius());
  BigFloat sum = third + third - BigFloat::from_rational(Rational(2, 3), 128);
  CHECK(abs(sum.center()) <= sum.radius());
  BigFloat w = third.widened(Rational(1, 1000));
  CHECK(w.radius() >= Rational(1, 1000));
  CHECK(compare(third, BigFloat::from_rational(Rational(1, 2), 64), Rational(1, 1000)) == Ordering3::Less);
  CHECK(compare(third, third, Rational(1, 1000)) == Ordering3::Indistinguishable);
}

TEST_CASE("pi and square roots") {
  // first 50 digits of pi
  const Rational ref = parse_rational("314159265358979323846264338327950288419716939937510/100000000000000000000000000000000000000000000000000");
  BigFloat pi = pi_approx(45);
  CHECK(abs(pi.center() - ref) < decimal_tolerance(44));
  CHECK(pi.radius() < decimal_tolerance(45));
  CHECK(abs(pi_machin(60).center() - pi_chudnovsky(60).center()) < decimal_tolerance(58));
  BigFloat r = sqrt_rational(Rational(2, 3), 40);
  Rational sq = r.center() * r.center();
  CHECK(abs(sq - Rational(2, 3)) < decimal_tolerance(39));
  CHECK_THROWS_AS(sqrt_rational(Rational(-1), 10), DomainError);
  CHECK(isqrt(Integer(99)) == 9);
}

TEST_CASE("decimal rendering rounds the center") {
  BigFloat x = BigFloat::from_rational(Rational(2, 3), 200);
  CHECK(x.to_decimal(5) == "0.66667");
  CHECK(BigFloat::from_rational(Rational(-1, 8), 64).to_decimal(3) == "-0.125");
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("0089/010") == Rational(89, 10));
}
