#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/properties.hpp"
#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"

using namespace wz;

namespace {
FactoredRational from_text(const std::string& text) {
  RationalFunction f = parse_rational_function(text);
  return *affine_factorization(f.num) * affine_factorization(f.den)->inverse();
}
}  // namespace

TEST_CASE("shift quotients of the worked term") {
  HyperTerm t = parse_term(wzfix::kGood1);
  CHECK(pochhammer_quotient(t, Var::N) == from_text(wzfix::kQuotientN));
  ShiftQuotient k = shift_quotient(t, Var::K);
  CHECK(k.times_symbolic_y);
  CHECK(k.value == from_text(wzfix::kQuotientK));
  CHECK(k.value.scale() == Rational(-1, 9));
  CHECK(shift_quotient(t, Var::N).value.scale() == Rational(-1, 144));
}

TEST_CASE("gamma balancing rejects non-hypergeometric terms") {
  // (1/2+k/2)_n alone has a k-quotient that is not rational.
  HyperTerm t = parse_term("z=1 * poch(1/2+k/2;n)");
  CHECK_THROWS_AS(pochhammer_quotient(t, Var::K), NotHypergeometric);
  CHECK_NOTHROW(pochhammer_quotient(t, Var::N));
}

TEST_CASE("direct evaluation") {
  HyperTerm t = parse_term("z=1 * poch(1/2;n)^2/poch(1;n)^2");
  CHECK(eval_b(t, 2, 0) == Rational(9, 64));
  HyperTerm pole = parse_term("z=1 * 1/poch(-1;n)");
  CHECK_THROWS_AS(eval_n_part(pole, 3, 0), PoleEncountered);
  CHECK(k_part_is_n_free(t));
}

TEST_CASE("quotient against direct evaluation, 30 points per catalog term") {
  auto out = wzprop::quotient_vs_direct_catalog(30, 99);
  INFO(out.failure);
  CHECK(out.ok);
  CHECK(out.cases == 30 * static_cast<long>(builtin_catalog().size()));
}

TEST_CASE("pole prefilter") {
  PrefilterResult bad = pole_prefilter(parse_term(wzfix::kPoleTerm));
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Rational(-1, 2));
  CHECK(pole_prefilter(parse_term(wzfix::kGood1)).accepted);
  CHECK(pole_prefilter(parse_term(wzfix::kGood2)).accepted);
  // Every catalog term passes.
  for (const auto& e : builtin_catalog()) CHECK_MESSAGE(pole_prefilter(e.term()).accepted, e.id);
}

TEST_CASE("terminating prefilter") {
  SeriesTarget target = find_entry("tableI-z-1")->target();
  PrefilterResult bad = terminating_prefilter(parse_term(wzfix::kTerminatingTerm), target, 30);
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Rational(1, 10));
  CHECK_THROWS_AS(terminating_prefilter(parse_term(wzfix::kGood1), target, 10), InsufficientPrecision);
  for (const auto& e : builtin_catalog())
    CHECK_MESSAGE(terminating_prefilter(e.term(), e.target(), 30).accepted, e.id);
}
