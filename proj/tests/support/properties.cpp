#include "properties.hpp"

#include <random>

#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"
#include "wz/factored.hpp"
#include "wz/poly2.hpp"

namespace wzprop {

using namespace wz;

namespace {

Rational small_rational(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  return rational_normalize(num(rng), den(rng));
}

Poly2 random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), deg(0, 3);
  Poly2 p;
  int count = terms(rng);
  for (int i = 0; i < count; ++i) p.add_term({deg(rng), deg(rng)}, small_rational(rng));
  return p;
}

AffineForm random_form(std::mt19937_64& rng) {
  for (;;) {
    AffineForm f(small_rational(rng), small_rational(rng, 3), small_rational(rng, 3));
    if (!f.is_constant()) return f;
  }
}

FactoredRational random_factored(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), expo(-2, 2);
  Rational scale;
  do scale = small_rational(rng);
  while (scale == 0);
  FactoredRational f(scale);
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    int e = expo(rng);
    if (e != 0) f.multiply(random_form(rng), e);
  }
  return f;
}

std::string show(const Poly2& p) { return "[" + to_string(p) + "]"; }

}  // namespace

Outcome dsl_round_trip_catalog() {
  Outcome out;
  for (const auto& e : builtin_catalog()) {
    HyperTerm t = e.term();
    std::string once = print_term(t);
    HyperTerm back = parse_term(once);
    std::string twice = print_term(back);
    ++out.cases;
    if (!(back == t) || once != twice) out.fail(e.id + ": " + once + " -> " + twice);
  }
  return out;
}

Outcome poly2_laws(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    Poly2 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    Rational n0 = small_rational(rng), k0 = small_rational(rng), d = small_rational(rng);
    if (!(a * b == b * a)) out.fail("commutativity " + show(a) + show(b));
    if (!((a * b) * c == a * (b * c))) out.fail("associativity " + show(a) + show(b) + show(c));
    if (!(a * (b + c) == a * b + a * c)) out.fail("distributivity " + show(a) + show(b) + show(c));
    if (!((a - b) + b == a)) out.fail("additive inverse " + show(a) + show(b));
    if (eval_poly(a * b, n0, k0) != eval_poly(a, n0, k0) * eval_poly(b, n0, k0))
      out.fail("evaluation of a product " + show(a) + show(b));
    if (!((a * b).shifted(Var::K, d) == a.shifted(Var::K, d) * b.shifted(Var::K, d)))
      out.fail("shift of a product " + show(a) + show(b));
    if (!(a.shifted(Var::N, d).shifted(Var::N, -d) == a)) out.fail("shift inverse " + show(a));
    if (eval_poly(a.shifted(Var::N, d), n0, k0) != eval_poly(a, n0 + d, k0)) out.fail("shift evaluation " + show(a));
  }
  return out;
}

Outcome factored_laws(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    FactoredRational f = random_factored(rng), g = random_factored(rng), h = random_factored(rng);
    if (!(f * g == g * f)) out.fail("commutativity " + f.to_string() + " , " + g.to_string());
    if (!((f * g) * h == f * (g * h))) out.fail("associativity " + f.to_string());
    if (!(f * f.inverse() == FactoredRational(Rational(1)))) out.fail("inverse " + f.to_string());
    Rational n0 = small_rational(rng, 20), k0 = small_rational(rng, 20), d = small_rational(rng);
    try {
      Rational fv = f.eval(n0, k0), gv = g.eval(n0, k0);
      if ((f * g).eval(n0, k0) != fv * gv) out.fail("evaluation of a product " + f.to_string());
      RationalFunction e = expand(f);
      if (eval_poly(e.num, n0, k0) != fv * eval_poly(e.den, n0, k0)) out.fail("expansion " + f.to_string());
    } catch (const DivisionByZero&) {
      // the random point hit a denominator zero; the laws above still ran
    }
    try {
      if (f.shifted(Var::K, d).eval(n0, k0) != f.eval(n0, k0 + d)) out.fail("shift " + f.to_string());
    } catch (const DivisionByZero&) {
    }
  }
  return out;
}

Outcome quotient_vs_direct(const HyperTerm& t, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, 25);
  FactoredRational qn = pochhammer_quotient(t, Var::N);
  FactoredRational qk = pochhammer_quotient(t, Var::K);
  Outcome out;
  for (int attempt = 0; out.cases < points && attempt < 50 * points; ++attempt) {
    long n = coord(rng), k = coord(rng);
    try {
      Rational b = eval_b(t, n, k);
      if (b == 0) continue;
      Rational direct_n = eval_b(t, n + 1, k) / b;
      Rational direct_k = eval_b(t, n, k + 1) / b;
      Rational vn = qn.eval(n, k), vk = qk.eval(n, k);
      ++out.cases;
      if (vn != direct_n || vk != direct_k)
        out.fail("(" + std::to_string(n) + "," + std::to_string(k) + "): quotient " + to_string(vn) + ", " +
                 to_string(vk) + " direct " + to_string(direct_n) + ", " + to_string(direct_k));
    } catch (const PoleEncountered&) {
    } catch (const DivisionByZero&) {
    }
  }
  if (out.cases < points) out.fail("only " + std::to_string(out.cases) + " usable points");
  return out;
}

Outcome quotient_vs_direct_catalog(int points, std::uint64_t seed) {
  Outcome out;
  for (const auto& e : builtin_catalog()) {
    Outcome one = quotient_vs_direct(e.term(), points, seed);
    out.cases += one.cases;
    if (!one.ok) out.fail(e.id + " " + one.failure);
  }
  return out;
}

}  // namespace wzprop
