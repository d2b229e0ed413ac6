#include <algorithm>
#include <random>
#include <set>

#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz {

const Rational& WZPair::y() const {
  if (!term.y) throw DomainError("pair '" + id + "' has no concrete y");
  return *term.y;
}

bool same_pair(const WZPair& a, const WZPair& b) { return a.term == b.term && a.R == b.R && a.S == b.S; }

namespace {

RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction scaled(const RationalFunction& a, const Rational& c) { return {a.num.scaled(c), a.den}; }

// ---- rational roots of univariate polynomials (lowest degree first) ----

std::vector<Integer> integer_coefficients(const std::vector<Rational>& p) {
  Integer l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : p) out.push_back(Integer(c * Rational(l)));
  return out;
}

std::vector<Integer> divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d * d != x) large.push_back(x / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval_uni(const std::vector<Rational>& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Distinct rational roots; nullopt when coefficients are too large to search.
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> p) {
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  if (p.size() <= 1) return roots;
  auto ints = integer_coefficients(p);
  const Integer cap = Integer("1000000000000");
  if (abs(Rational(ints.front())) > Rational(cap) || abs(Rational(ints.back())) > Rational(cap)) return std::nullopt;
  for (const auto& num : divisors(ints.front()))
    for (const auto& den : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational r(Integer(sign * num), den);
        r.canonicalize();
        if (eval_uni(p, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return roots;
}

std::optional<AffineForm> find_affine_factor(const Poly2& p) {
  // Factors free of n divide the leading coefficient in n.
  int dn = p.degree(Var::N);
  std::vector<Rational> lead_k;
  for (const auto& [m, c] : p.terms()) {
    if (m.first != dn) continue;
    if (lead_k.size() <= static_cast<std::size_t>(m.second)) lead_k.resize(static_cast<std::size_t>(m.second) + 1);
    lead_k[static_cast<std::size_t>(m.second)] = c;
  }
  auto kroots = rational_roots(lead_k);
  if (!kroots) return std::nullopt;
  for (const auto& r : *kroots) {
    AffineForm f(-r, 0, 1);
    if (divide_exact(p, f)) return f;
  }
  if (dn <= 0) return std::nullopt;
  // Otherwise n = r0 + (r1 - r0) k with r0, r1 roots at k = 0 and k = 1.
  auto r0 = rational_roots(restrict_to_k(p, 0));
  auto r1 = rational_roots(restrict_to_k(p, 1));
  if (!r0 || !r1) return std::nullopt;
  for (const auto& a : *r0)
    for (const auto& b : *r1) {
      AffineForm f(-a, 1, -(b - a));
      if (divide_exact(p, f)) return f;
    }
  return std::nullopt;
}

}  // namespace

std::optional<FactoredRational> affine_factorization(const Poly2& p) {
  if (p.is_zero()) return std::nullopt;
  FactoredRational out;
  Poly2 rest = p;
  while (rest.total_degree() > 0) {
    auto f = find_affine_factor(rest);
    if (!f) return std::nullopt;
    rest = *divide_exact(rest, *f);
    out.multiply(*f, 1);
  }
  return out.scaled(rest.coeff(0, 0));
}

WzCheck check_wz_exact(const WZPair& p) {
  RationalFunction qn = expand(pochhammer_quotient(p.term, Var::N));
  RationalFunction qk = expand(pochhammer_quotient(p.term, Var::K));
  // F(n+1,k)/T - F(n,k)/T - G(n,k+1)/T + G(n,k)/T with T = z^n y^k B(n,k).
  RationalFunction lhs = scaled(mul(qn, p.S.shifted(Var::N, 1)), p.z());
  lhs = add(lhs, scaled(p.S, -1));
  lhs = add(lhs, scaled(mul(qk, p.R.shifted(Var::K, 1)), -p.y()));
  lhs = add(lhs, p.R);
  return {lhs.num.is_zero(), lhs.num};
}

Certificate certificate(const WZPair& p, std::uint64_t seed) {
  if (p.S.num.is_zero()) throw ZeroS();
  Poly2 num = p.R.num * p.S.den;
  Poly2 den = p.R.den * p.S.num;

  std::set<AffineForm> candidates{AffineForm::variable(Var::N)};
  for (const Poly2* q : {&p.R.den, &p.S.den, &p.S.num, &p.R.num})
    if (auto f = affine_factorization(*q))
      for (const auto& [form, e] : f->factors()) candidates.insert(form);
  for (const auto& f : candidates) {
    while (true) {
      auto a = divide_exact(num, f);
      if (!a) break;
      auto b = divide_exact(den, f);
      if (!b) break;
      num = *a;
      den = *b;
    }
  }
  // Proportional numerator and denominator collapse to a constant.
  if (!num.is_zero() && num.size() == den.size()) {
    auto [m, c] = graded_terms(num).front();
    Rational ratio = c / den.coeff(m.first, m.second);
    if (den.coeff(m.first, m.second) != 0 && den.scaled(ratio) == num) {
      num = Poly2::constant(ratio);
      den = Poly2::constant(1);
    }
  }
  if (den.total_degree() == 0) {
    num = num.scaled(1 / den.coeff(0, 0));
    den = Poly2::constant(1);
  } else if (leading_coefficient(den) < 0) {
    num = -num;
    den = -den;
  }
  Certificate cert{{num, den}, 0};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-60, 60), denom(1, 7);
  int attempts = 0;
  while (cert.spot_checks < 20) {
    if (++attempts > 2000) throw DomainError("could not find 20 pole-free spot-check points");
    Rational n(numer(rng), denom(rng)), k(numer(rng), denom(rng));
    n.canonicalize();
    k.canonicalize();
    if (eval_poly(p.R.den, n, k) == 0 || eval_poly(p.S.den, n, k) == 0 || eval_poly(p.S.num, n, k) == 0 ||
        eval_poly(den, n, k) == 0)
      continue;
    if (cert.C.eval(n, k) * p.S.eval(n, k) != p.R.eval(n, k))
      throw DomainError("certificate spot check failed at n=" + to_string(n) + ", k=" + to_string(k));
    ++cert.spot_checks;
  }
  return cert;
}

}  // namespace wz
