#include <map>

#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz {

namespace {

constexpr const char* kEvidence =
    "numerical evidence, not a proof: constancy in k would follow from Carlson's theorem, which is not checked";

// sin(pi x)^2 for x in (0,1) with a rational value; nullopt otherwise.
std::optional<Rational> sin_pi_squared(const Rational& x) {
  static const std::map<Rational, Rational> table = {
      {Rational(1, 2), 1},           {Rational(1, 3), Rational(3, 4)}, {Rational(2, 3), Rational(3, 4)},
      {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(1, 2)}, {Rational(1, 6), Rational(1, 4)},
      {Rational(5, 6), Rational(1, 4)},
  };
  auto it = table.find(x);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace

Rational rhs_factor(const RhsSpec& rhs, long k) {
  if (k < 0) throw DomainError("the RHS factor is rational only at integer k >= 0");
  Rational one_k = rising_factorial(1, k);
  return pow(rhs.geom, k) * one_k * one_k / (rising_factorial(rhs.t, k) * rising_factorial(1 - rhs.t, k));
}

MatchResult match_pi(const SumResult& sum, const RhsSpec& rhs, long k) {
  MatchResult m;
  m.rho = rhs_factor(rhs, k);
  m.tolerance = decimal_tolerance(sum.precision - 5);
  BigFloat pi = pi_approx(sum.precision + 10);
  m.square = (pi * sum.value).div(m.rho).square();
  if (m.square.radius() * 2 >= m.tolerance)
    throw InsufficientPrecision("error radius " + std::to_string(m.square.radius().get_d()) +
                                " is not small against the tolerance");
  m.delta = abs(m.square.center() - rhs.c_squared);
  m.matched = m.delta + m.square.radius() < m.tolerance;
  return m;
}

ConstancyReport constancy_check(const WZPair& p, const std::vector<long>& ks, int precision) {
  if (!k_part_is_n_free(p.term)) throw DomainError("constancy check needs an n-free k-raised part");
  ConstancyReport rep;
  rep.ks = ks;
  rep.label = kEvidence;
  for (long k : ks) {
    SumResult s = sum_series(p, k, precision);
    Rational norm = pow(p.y(), k) * eval_k_part(p.term, 0, k);
    rep.constants.push_back(s.value.mul(norm));
  }
  rep.consistent = true;
  const Rational tol = decimal_tolerance(precision);
  for (std::size_t i = 1; i < rep.constants.size(); ++i)
    if (compare(rep.constants[0], rep.constants[i], tol) != Ordering3::Indistinguishable) rep.consistent = false;
  return rep;
}

Rational central_binomial_square(const Rational& z) {
  Rational d = 1 - 4 * z;
  if (d <= 0) throw Divergent("sum z^n C(2n,n) diverges for z >= 1/4");
  return 1 / d;
}

LimitReport limit_constant_check(const WZPair& p, int precision) {
  LimitReport rep;
  rep.label = "numerical evidence, not a proof: relies on exchanging limit and sum";
  auto fail = [&](std::string why) {
    rep.applicable = false;
    rep.reason = std::move(why);
    return rep;
  };
  if (p.y() != 1) return fail("y != 1, so y^k has no finite nonzero limit");

  // k-raised part: prod Gamma(x+k)^e / Gamma(x)^e ~ k^(sum e x) / prod Gamma(x)^e when sum e = 0.
  int gamma_balance = 0;
  Rational k_power = 0;
  Rational rational_part = 1;       // rational factors from reducing Gamma(x) to x in (0,1]
  std::map<Rational, int> atoms;    // Gamma(x0)^(-e) atoms, x0 in (0,1)
  for (const auto& f : p.term.factors) {
    if (f.var != Var::K) continue;
    if (!f.base.is_constant()) return fail("k-raised factor depends on n");
    const Rational& x = f.base.c0;
    if (x <= 0) return fail("k-raised factor with non-positive base");
    gamma_balance += f.exponent;
    k_power += f.exponent * x;
    Rational x0 = x - Rational(floor(x));
    if (x0 == 0) x0 = 1;
    // Gamma(x) = Gamma(x0) (x0)_(x - x0)
    long shift = Integer(x - x0).get_si();
    rational_part *= pow(rising_factorial(x0, shift), -f.exponent);
    if (x0 != 1) atoms[x0] -= f.exponent;
  }
  if (gamma_balance != 0) return fail("k-raised part does not balance");

  // n-raised part: (c0 + ck k)_n ~ (ck k)^n; constant bases survive.
  Rational geom = 1;
  int n_balance = 0;
  std::map<Rational, int> survivors;
  for (const auto& f : p.term.factors) {
    if (f.var != Var::N) continue;
    if (f.base.ck != 0) {
      geom *= pow(f.base.ck, f.exponent);
      n_balance += f.exponent;
    } else {
      survivors[f.base.c0] += f.exponent;
    }
  }
  if (n_balance != 0) return fail("n-raised factors grow like a power of k");
  for (auto it = survivors.begin(); it != survivors.end();)
    it = it->second == 0 ? survivors.erase(it) : std::next(it);
  if (survivors != std::map<Rational, int>{{Rational(1, 2), 1}, {Rational(1), -1}})
    return fail("surviving factors are not (1/2)_n/(1)_n");

  // R ~ c_R k^m with c_R constant in n.
  auto k_lead = [](const Poly2& q, int& deg) {
    deg = q.degree(Var::K);
    Poly2 lead;
    for (const auto& [m, c] : q.terms())
      if (m.second == deg) lead.add_term({m.first, 0}, c);
    return lead;
  };
  int dnum = 0, dden = 0;
  Poly2 lnum = k_lead(p.R.num, dnum), lden = k_lead(p.R.den, dden);
  if (lnum.total_degree() != 0 || lden.total_degree() != 0) return fail("leading k-behaviour of R depends on n");
  Rational c_r = lnum.coeff(0, 0) / lden.coeff(0, 0);
  if (k_power + (dnum - dden) != 0) return fail("sum_n G(n,k) does not tend to a finite nonzero limit");

  // Pair Gamma(x0) Gamma(1-x0) = pi / sin(pi x0); Gamma(1/2)^2 = pi.
  Rational sin_sq = 1;
  int pi_power = 0;
  for (const auto& [x0, e] : atoms) {
    if (e == 0) continue;
    if (x0 == Rational(1, 2)) {
      if (e % 2 != 0) return fail("odd power of Gamma(1/2)");
      pi_power += e / 2;
      continue;
    }
    if (x0 > Rational(1, 2)) continue;
    auto partner = atoms.find(1 - x0);
    if (partner == atoms.end() || partner->second != e) return fail("Gamma factors do not pair by reflection");
    auto s2 = sin_pi_squared(x0);
    if (!s2) return fail("sin(pi x) is not a square root of a rational");
    // (Gamma(x0) Gamma(1-x0))^e = (pi / sin)^e
    pi_power += e;
    sin_sq *= pow(*s2, -e);
  }
  if (pi_power != -1) return fail("the limit is not a rational multiple of an algebraic number over pi");

  rep.z_prime = p.z() * geom / 4;
  if (4 * abs(rep.z_prime) >= 1) return fail("limit series diverges");
  rep.applicable = true;
  Rational lead = c_r * rational_part;
  rep.sign = lead < 0 ? -1 : 1;
  rep.constant_sq = lead * lead * sin_sq * central_binomial_square(rep.z_prime);

  // Numerical side: sum_n z'^n C(2n,n) against the closed form.
  SumResult s = sum_terms(1, {2 * rep.z_prime, 4 * rep.z_prime}, {1, 1}, precision + 5);
  rep.series_value = s.value;
  BigFloat square = s.value.square();
  rep.series_matches =
      abs(square.center() - central_binomial_square(rep.z_prime)) + square.radius() < decimal_tolerance(precision);
  return rep;
}

}  // namespace wz
