#include "wz/hyperterm.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "wz/errors.hpp"

namespace wz {

bool operator<(const PochFactor& a, const PochFactor& b) {
  if (a.var != b.var) return a.var == Var::N;
  if (!(a.base == b.base)) return a.base < b.base;
  return a.exponent < b.exponent;
}

PochFactor make_poch(const AffineForm& base, Var var, int exponent) {
  if (exponent == 0) throw DomainError("Pochhammer factor with exponent 0");
  if (base.coeff(var) != 0)
    throw DomainError("Pochhammer base " + base.to_string() + " depends on its raising variable " +
                      std::string(1, var_name(var)));
  return {base, var, exponent};
}

std::vector<PochFactor> HyperTerm::sorted_factors() const {
  std::vector<PochFactor> f = factors;
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<GammaAtom> to_gamma(const HyperTerm& t) {
  std::vector<GammaAtom> atoms;
  for (const auto& f : t.factors) {
    AffineForm raised = f.base;
    (f.var == Var::N ? raised.cn : raised.ck) += 1;
    atoms.push_back({raised, f.exponent});
    atoms.push_back({f.base, -f.exponent});
  }
  return atoms;
}

FactoredRational pochhammer_quotient(const HyperTerm& t, Var v) {
  // Gamma(shifted)^e / Gamma(original)^e for every atom, merged by argument.
  std::map<AffineForm, int> net;
  for (const auto& atom : to_gamma(t)) {
    net[atom.argument.shifted(v, 1)] += atom.exponent;
    net[atom.argument] -= atom.exponent;
  }
  using ClassKey = std::tuple<Rational, Rational, Rational>;
  std::map<ClassKey, std::vector<std::pair<AffineForm, int>>> classes;
  for (const auto& [arg, e] : net) {
    if (e == 0) continue;
    Rational frac = arg.c0 - Rational(floor(arg.c0));
    classes[{arg.cn, arg.ck, frac}].emplace_back(arg, e);
  }
  FactoredRational q;
  for (const auto& [key, members] : classes) {
    int total = 0;
    Rational base_c0 = members.front().first.c0;
    for (const auto& [arg, e] : members) {
      total += e;
      if (arg.c0 < base_c0) base_c0 = arg.c0;
    }
    if (total != 0) {
      const auto& [cn, ck, frac] = key;
      throw NotHypergeometric("Gamma class of " + AffineForm(frac, cn, ck).to_string() +
                              " does not balance in the " + std::string(1, var_name(v)) + "-quotient");
    }
    // Gamma(x0 + m)^e = Gamma(x0)^e * (x0)_m^e, and the Gamma(x0) powers cancel.
    AffineForm x0(base_c0, std::get<0>(key), std::get<1>(key));
    for (const auto& [arg, e] : members) {
      Integer m = floor(arg.c0 - base_c0);
      for (long j = 0; j < m.get_si(); ++j) q.multiply(x0 + Rational(j), e);
    }
  }
  return q;
}

ShiftQuotient shift_quotient(const HyperTerm& t, Var v) {
  FactoredRational q = pochhammer_quotient(t, v);
  if (v == Var::N) return {q.scaled(t.z), false};
  if (t.y) return {q.scaled(*t.y), false};
  return {q, true};
}

namespace {

Rational poch_power(const PochFactor& f, long length, const Rational& n, const Rational& k, long n_index) {
  Rational x = f.base.eval(n, k);
  Rational v = rising_factorial(x, length);
  if (v == 0) {
    if (f.exponent < 0) throw PoleEncountered(n_index, "(" + f.base.to_string() + ")_" + var_name(f.var));
    return 0;
  }
  return pow(v, f.exponent);
}

}  // namespace

Rational eval_n_part(const HyperTerm& t, long n, const Rational& k) {
  if (n < 0) throw DomainError("n-raised Pochhammer with negative length");
  Rational v = 1;
  for (const auto& f : t.factors)
    if (f.var == Var::N) v *= poch_power(f, n, n, k, n);
  return v;
}

Rational eval_k_part(const HyperTerm& t, long n, long k) {
  if (k < 0) throw DomainError("k-raised Pochhammer with negative length");
  Rational v = 1;
  for (const auto& f : t.factors)
    if (f.var == Var::K) v *= poch_power(f, k, n, k, n);
  return v;
}

Rational eval_b(const HyperTerm& t, long n, long k) { return eval_n_part(t, n, k) * eval_k_part(t, n, k); }

bool k_part_is_n_free(const HyperTerm& t) {
  return std::all_of(t.factors.begin(), t.factors.end(),
                     [](const PochFactor& f) { return f.var == Var::N || f.base.cn == 0; });
}

}  // namespace wz
