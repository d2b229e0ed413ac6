#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/properties.hpp"
#include "wz/dsl.hpp"

using namespace wz;

TEST_CASE("catalog terms round trip") {
  auto out = wzprop::dsl_round_trip_catalog();
  INFO(out.failure);
  CHECK(out.ok);
  CHECK(out.cases >= 24);
}

TEST_CASE("canonical printing") {
  HyperTerm t = parse_term("z = -1/4 * poch(1;n)^-1 * poch(1/2 ; n)");
  CHECK(print_term(t) == "z=-1/4 * poch(1/2;n)/poch(1;n)");
  CHECK(print_term(parse_term("z=1 * 1")) == "z=1 * 1");
  CHECK(print_term(parse_term("z=2 * poch(k+1/3;n)^2")) == "z=2 * poch(1/3+k;n)^2");
  CHECK(parse_term("z=1 * poch(3k/2+1/4;n)") == parse_term("z=1*poch(1/4+3*k/2;n)"));
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse_term("z=1 * poch(1/2;q)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().column == 16);
    CHECK(e.found() == "'q'");
    CHECK(e.expected().size() == 2);
  }
  CHECK_THROWS_AS(parse_term("z=1 * poch(1/2+n;n)"), ParseError);
  CHECK_THROWS_AS(parse_term("poch(1/2;n)"), ParseError);
  CHECK_THROWS_AS(parse_term("z=1 * poch(1/2;n) extra"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/(n+1)"), ParseError);
}

TEST_CASE("rational function expressions") {
  RationalFunction f = parse_rational_function("-2*n*(12*k^2+8*k-4*n^2+2*n+1)/(2*k-2*n+1)^2");
  CHECK(f.eval(1, 1) == Rational(-2 * (12 + 8 - 4 + 2 + 1), 1));
  CHECK(leading_coefficient(f.den) > 0);
  CHECK(parse_poly("(n+k)^3") == parse_poly("n^3+3n^2*k+3n*k^2+k^3"));
}

TEST_CASE("random terms round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), expo(-2, 2), count(0, 5), var(0, 1);
  for (int i = 0; i < 300; ++i) {
    HyperTerm t;
    t.z = rational_normalize(num(rng) == 0 ? 1 : num(rng), den(rng));
    if (t.z == 0) t.z = 1;
    int c = count(rng);
    for (int j = 0; j < c; ++j) {
      Var v = var(rng) ? Var::K : Var::N;
      AffineForm base(rational_normalize(num(rng), den(rng)), 0, 0);
      if (v == Var::N) base.ck = rational_normalize(num(rng), den(rng));
      else base.cn = rational_normalize(num(rng), den(rng));
      int e = expo(rng);
      if (e == 0) e = 1;
      t.factors.push_back(make_poch(base, v, e));
    }
    std::string text = print_term(t);
    INFO(text);
    CHECK(parse_term(text) == t);
  }
}
