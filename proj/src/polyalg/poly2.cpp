#include "wz/poly2.hpp"

#include <algorithm>

#include "wz/errors.hpp"

namespace wz {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

Poly2U operator*(const Poly2U& a, const Poly2& b) {
  Poly2U r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

Poly2 poly_from_affine(const AffineForm& f) {
  Poly2 p;
  p.add_term({0, 0}, f.c0);
  p.add_term({1, 0}, f.cn);
  p.add_term({0, 1}, f.ck);
  return p;
}

Rational eval_poly(const Poly2& p, const Rational& n, const Rational& k) {
  Rational v = 0;
  for (const auto& [m, c] : p.terms()) v += c * pow(n, m.first) * pow(k, m.second);
  return v;
}

std::vector<Rational> restrict_to_k(const Poly2& p, const Rational& k0) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree(Var::N), 0)) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m.first)] += c * pow(k0, m.second);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

namespace {

bool graded_before(const Monomial& a, const Monomial& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da > db;
  return a.first > b.first;
}

}  // namespace

std::vector<std::pair<Monomial, Rational>> graded_terms(const Poly2& p) {
  std::vector<std::pair<Monomial, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return graded_before(x.first, y.first); });
  return out;
}

Rational leading_coefficient(const Poly2& p) {
  auto t = graded_terms(p);
  return t.empty() ? Rational(0) : t.front().second;
}

std::optional<Poly2> divide_exact(const Poly2& p, const AffineForm& f) {
  if (f.is_zero()) throw DivisionByZero();
  if (f.is_constant()) return p.scaled(Rational(1) / f.c0);
  // Division by a single polynomial: remainder is zero iff f divides p.
  Monomial lead = f.cn != 0 ? Monomial{1, 0} : Monomial{0, 1};
  const Rational& lc = f.cn != 0 ? f.cn : f.ck;
  Poly2 fp = poly_from_affine(f);
  Poly2 rest = p, quotient;
  while (!rest.is_zero()) {
    auto [m, c] = graded_terms(rest).front();
    if (m.first < lead.first || m.second < lead.second) return std::nullopt;
    Poly2 t = Poly2::monomial(m.first - lead.first, m.second - lead.second, c / lc);
    quotient += t;
    rest -= t * fp;
  }
  return quotient;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto put = [&s](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put('n', m.first);
  put('k', m.second);
  return s;
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : graded_terms(p)) {
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    std::string mono = monomial_text(m);
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

std::string to_string(const Poly2U& p) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m);
  std::sort(order.begin(), order.end(), graded_before);
  std::string out;
  for (const auto& m : order) {
    if (!out.empty()) out += " + ";
    std::string mono = monomial_text(m);
    out += "(" + p.coeff(m.first, m.second).to_string() + ")";
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

LinExpr coeff_extract(const Poly2U& p, int dn, int dk) { return p.coeff(dn, dk); }

Poly2 substitute(const Poly2U& p, const Assignment& values) {
  Poly2 r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, c.eval(values));
  return r;
}

Poly2U lift(const Poly2& p) {
  Poly2U r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, LinExpr(c));
  return r;
}

Rational RationalFunction::eval(const Rational& n, const Rational& k) const {
  Rational d = eval_poly(den, n, k);
  if (d == 0) throw DivisionByZero();
  return eval_poly(num, n, k) / d;
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace wz
