#include <algorithm>

#include "wz/ansatz.hpp"
#include "wz/errors.hpp"

namespace wz {

namespace {

// Monomials of total degree <= d, highest degree first, n before k.
std::vector<Monomial> graded_monomials(int d) {
  std::vector<Monomial> out;
  for (int total = d; total >= 0; --total)
    for (int i = total; i >= 0; --i) out.emplace_back(i, total - i);
  return out;
}

Poly2U generic_poly(char family, int d, std::vector<std::string>& names) {
  Poly2U p;
  for (const auto& [i, j] : graded_monomials(d)) {
    std::string name = unknown_name(family, i, j);
    names.push_back(name);
    p.add_term({i, j}, LinExpr::symbol(name));
  }
  return p;
}

FactoredRational inverse_product(const std::vector<std::pair<AffineForm, int>>& factors) {
  FactoredRational f;
  for (const auto& [form, mult] : factors) f.multiply(form, -mult);
  return f;
}

// y * c with c linear in the d's: constants go to y, d_ij goes to w_ij.
LinExpr times_y(const LinExpr& c) {
  LinExpr out = LinExpr::symbol("y", c.constant());
  if (c.constant() == 0) out = LinExpr();
  for (const auto& [name, coeff] : c.terms()) {
    if (name.empty() || name[0] != 'd')
      throw DomainError("cannot linearize y * " + name);
    out += LinExpr::symbol("w" + name.substr(1), coeff);
  }
  return out;
}

struct Summand {
  FactoredRational factor;
  Poly2U numerator;
};

}  // namespace

Ansatz build_ansatz(const DenomSplit& split_n, const DenomSplit& split_k, const Integer& a, const Integer& b,
                    int degree, long k_shift) {
  if (degree < 1) throw DomainError("ansatz degree must be at least 1");
  Ansatz ans;
  ans.degree = degree;
  ans.r = split_n.degree;
  ans.s = split_k.degree;
  ans.k_shift = k_shift;

  Poly2 pr = product_poly(split_n.kept);
  Poly2 pr_at_k0;
  for (const auto& [m, c] : pr.terms())
    if (m.second == 0) pr_at_k0.add_term(m, c);
  Poly2 lead = poly_from_affine(AffineForm(Rational(a), Rational(b), 0)) * pr_at_k0;

  std::vector<std::string> d_names, e_names;
  Poly2U u = generic_poly('d', ans.r * degree, d_names);
  Poly2U v = generic_poly('e', ans.s * degree, e_names);

  ans.R.factor = inverse_product(split_n.kept).shifted(Var::K, Rational(k_shift));
  ans.R.numerator = lift(lead) + u * poly_var(Var::K);
  // The leading n is kept in factored form so that it can cancel against
  // (n+1) denominators of the n-quotient once shifted.
  ans.S.factor = inverse_product(split_k.kept) * FactoredRational(AffineForm::variable(Var::N), 1);
  ans.S.numerator = v;

  ans.unknowns = d_names;
  ans.unknowns.insert(ans.unknowns.end(), e_names.begin(), e_names.end());
  ans.unknowns.push_back("y");
  return ans;
}

Ansatz ansatz_for(const HyperTerm& t, const Integer& a, const Integer& b, int degree, long k_shift) {
  DenomSplit sn = split_denominators(pochhammer_quotient(t, Var::N), -1, 0);
  DenomSplit sk = split_denominators(pochhammer_quotient(t, Var::K), 0, -1);
  return build_ansatz(sn, sk, a, b, degree, k_shift);
}

Poly2U assemble_H(const HyperTerm& t, const Ansatz& ans, const Rational& z) {
  FactoredRational qn = pochhammer_quotient(t, Var::N);
  FactoredRational qk = pochhammer_quotient(t, Var::K);

  std::vector<Summand> parts;
  parts.push_back({qk * ans.R.factor.shifted(Var::K, 1),
                   map_coefficients(ans.R.numerator.shifted(Var::K, 1), times_y)});
  parts.push_back({ans.R.factor, -ans.R.numerator});
  parts.push_back({(qn * ans.S.factor.shifted(Var::N, 1)).scaled(-z), ans.S.numerator.shifted(Var::N, 1)});
  parts.push_back({ans.S.factor, ans.S.numerator});

  std::map<AffineForm, int> lcd;
  for (const auto& p : parts)
    for (const auto& [f, m] : p.factor.denominator_factors()) lcd[f] = std::max(lcd[f], m);
  FactoredRational clear;
  for (const auto& [f, m] : lcd) clear.multiply(f, m);

  Poly2U h;
  for (const auto& p : parts) {
    FactoredRational cleared = p.factor * clear;
    Poly2 poly = product_poly(cleared.numerator_factors()).scaled(cleared.scale());
    h += p.numerator * poly;
  }
  return h;
}

RationalFunction instantiate(const Template& tpl, const Assignment& values) {
  RationalFunction f = expand(tpl.factor);
  Poly2 num = substitute(tpl.numerator, values) * f.num;
  return {num, f.den};
}

}  // namespace wz
