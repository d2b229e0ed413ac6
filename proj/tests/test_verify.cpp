#include "doctest.h"
#include "support/fixtures.hpp"
#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"
#include "wz/verify.hpp"

using namespace wz;

TEST_CASE("every catalog pair is an exact WZ pair") {
  for (const auto& e : builtin_catalog()) {
    WzCheck c = check_wz_exact(e.pair());
    CHECK_MESSAGE(c.certified, e.id);
  }
}

TEST_CASE("a perturbed pair is rejected") {
  WZPair p = find_entry("solution1")->pair();
  p.R.num = p.R.num + Poly2::constant(1);
  WzCheck c = check_wz_exact(p);
  CHECK_FALSE(c.certified);
  CHECK_FALSE(c.residual.is_zero());
  CHECK_FALSE(telescope_partial(p, 20, 0).holds);
}

TEST_CASE("certificate C = R/S") {
  WZPair p = find_entry("solution1")->pair();
  Certificate c = certificate(p, 3);
  CHECK(c.spot_checks == 20);
  CHECK(equivalent(c.C, {p.R.num * p.S.den, p.R.den * p.S.num}));
  WZPair zero = p;
  zero.S.num = Poly2();
  CHECK_THROWS_AS(certificate(zero), ZeroS);
}

TEST_CASE("affine factorization") {
  auto f = affine_factorization(parse_poly("4n^2-4k^2+4n+1"));
  REQUIRE(f.has_value());
  CHECK(f->exponent_of(AffineForm(1, 2, 2)) == 1);
  CHECK(f->exponent_of(AffineForm(1, 2, -2)) == 1);
  CHECK_FALSE(affine_factorization(parse_poly("n^2+k^2+1")).has_value());
}

TEST_CASE("exact telescoping at N=100") {
  for (const char* id : {"solution1", "solution2", "morefor1", "morefor4", "morefor9", "morefor11"}) {
    WZPair p = find_entry(id)->pair();
    for (long k = 0; k <= 2; ++k) {
      TelescopeReport r = telescope_partial(p, 100, k);
      CHECK_MESSAGE(r.holds, id);
      CHECK_MESSAGE(r.f0_zero, id);
      CHECK(r.lhs == r.rhs);
    }
  }
  // A rational k goes through the general path.
  TelescopeReport half = telescope_partial(find_entry("morefor2")->pair(), 40, Rational(1, 3));
  CHECK(half.holds);
}

namespace {
Rational decimal(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  return parse_rational(digits + "/1" + std::string(text.size() - dot - 1, '0'));
}
}  // namespace

TEST_CASE("series values agree with the reference digits") {
  for (const auto& f : wzfix::kSeriesValues) {
    SumResult s = sum_series(find_entry(f.id)->pair(), f.k, 42);
    Rational ref = decimal(f.value);
    INFO(f.id, " k=", f.k);
    CHECK(abs(s.value.center() - ref) < decimal_tolerance(40));
    CHECK(s.value.radius() < decimal_tolerance(42));
  }
}

TEST_CASE("summation methods") {
  // sum (1/2)^n = 2, geometric with a rigorous tail
  SumResult g = sum_terms(1, {Rational(1, 2)}, {1}, 30);
  CHECK(abs(g.value.center() - 2) <= g.value.radius());
  CHECK_FALSE(g.accelerated);
  // sum (-1)^n/(n+1) = log 2 by acceleration: t_{n+1}/t_n = -(n+1)/(n+2)
  SumResult a = sum_terms(1, {-1, -1}, {2, 1}, 30);
  CHECK(a.accelerated);
  CHECK(a.value.to_decimal(20) == "0.69314718055994530942");
  CHECK_THROWS_AS(sum_terms(1, {1, 1}, {1, 1}, 10), Divergent);   // ratio 1
  CHECK_THROWS_AS(sum_terms(1, {2}, {1}, 10), Divergent);         // ratio 2
  CHECK_THROWS_AS(sum_terms(1, {-1, -1}, {2, 1}, 40, SumMethod::Direct), InsufficientPrecision);
}

TEST_CASE("1/pi matches at integer k") {
  for (const char* id : {"morefor2", "morefor6", "tableII-z-1/16"}) {
    const CatalogEntry* e = find_entry(id);
    for (long k = 0; k <= 3; ++k) {
      MatchResult m = match_pi(sum_series(e->pair(), k, 40), e->rhs(), k);
      CHECK_MESSAGE(m.matched, id);
      CHECK(m.delta < decimal_tolerance(35));
    }
  }
  // The wrong constant is refused.
  const CatalogEntry* e = find_entry("morefor5");
  RhsSpec wrong = e->rhs();
  wrong.c_squared = Rational(4, 3);
  CHECK_FALSE(match_pi(sum_series(e->pair(), 0, 40), wrong, 0).matched);
  CHECK(rhs_factor(find_entry("morefor2")->rhs(), 1) == Rational(16, 27) * Rational(36, 5));
}

TEST_CASE("morefor1 needs acceleration at k=0 and direct summation works at k=1") {
  WZPair p = find_entry("morefor1")->pair();
  SumResult s0 = sum_series(p, 0, 25);
  CHECK(s0.accelerated);
  SumResult s1 = sum_series(p, 1, 32, SumMethod::Direct);
  CHECK_FALSE(s1.accelerated);
  BigFloat pi = pi_approx(40);
  CHECK(abs(s1.value.center() - Rational(8, 3) / pi.center()) < decimal_tolerance(30));
}

TEST_CASE("constancy in k") {
  ConstancyReport r = constancy_check(find_entry("morefor7")->pair(), {0, 1, 2, 3}, 30);
  CHECK(r.consistent);
  CHECK(r.constants.size() == 4);
  CHECK(r.label.find("not a proof") != std::string::npos);
}

TEST_CASE("limit constant of the second worked solution") {
  LimitReport r = limit_constant_check(find_entry("solution2")->pair(), 30);
  REQUIRE(r.applicable);
  CHECK(r.z_prime == Rational(-1, 8));
  CHECK(r.constant_sq == 432);
  CHECK(r.series_matches);
  CHECK(central_binomial_square(Rational(-1, 8)) == Rational(2, 3));
  LimitReport na = limit_constant_check(find_entry("morefor1")->pair(), 30);
  CHECK_FALSE(na.applicable);
  CHECK_FALSE(na.reason.empty());
}
