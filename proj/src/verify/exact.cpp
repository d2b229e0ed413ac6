#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz {

namespace {

// z^n * (n-raised part of B)(n, k) for n = 0..N, built incrementally.
std::vector<Rational> n_part_sequence(const HyperTerm& t, long N, const Rational& k) {
  std::vector<Rational> out{Rational(1)};
  Rational v = 1;
  for (long n = 0; n < N; ++n) {
    for (const auto& f : t.factors) {
      if (f.var != Var::N) continue;
      Rational x = f.base.eval(0, k) + n;
      if (x == 0) {
        if (f.exponent < 0) throw PoleEncountered(n + 1, "(" + f.base.to_string() + ")_n");
        v = 0;
        continue;
      }
      if (v != 0) v *= pow(x, f.exponent);
    }
    v *= t.z;
    out.push_back(v);
  }
  return out;
}

Rational eval_rf(const RationalFunction& f, long n, const Rational& k, const char* what) {
  Rational d = eval_poly(f.den, n, k);
  if (d == 0) throw PoleEncountered(n, std::string(what) + " denominator " + to_string(f.den));
  return eval_poly(f.num, n, k) / d;
}

// K(k+1)/K(k) for an n-free k-raised part.
Rational k_step(const HyperTerm& t, const Rational& k) {
  Rational v = 1;
  for (const auto& f : t.factors) {
    if (f.var != Var::K) continue;
    Rational x = f.base.c0 + k;
    if (x == 0 && f.exponent < 0) throw PoleEncountered(0, "(" + f.base.to_string() + ")_k at k=" + to_string(k));
    v *= x == 0 ? Rational(0) : pow(x, f.exponent);
  }
  return v;
}

}  // namespace

TelescopeReport telescope_partial(const WZPair& p, long N, const Rational& k) {
  if (N < 0) throw DomainError("telescope_partial needs N >= 0");
  TelescopeReport rep;
  rep.N = N;
  rep.k = k;

  const Rational& y = p.y();
  std::vector<Rational> b0, b1;
  Rational step;  // factor turning the k+1 terms into the k normalization
  if (k_part_is_n_free(p.term)) {
    b0 = n_part_sequence(p.term, N, k);
    b1 = n_part_sequence(p.term, N, k + 1);
    step = y * k_step(p.term, k);
  } else {
    // General k-raised part: integer k only, full values of B.
    if (!is_integer(k) || k < 0) throw DomainError("k-raised factors depend on n; k must be a non-negative integer");
    long kk = k.get_num().get_si();
    for (long n = 0; n <= N; ++n) {
      Rational zn = pow(p.z(), n);
      b0.push_back(zn * eval_b(p.term, n, kk));
      b1.push_back(zn * eval_b(p.term, n, kk + 1));
    }
    step = y;
  }

  Rational lhs = 0;
  for (long n = 0; n < N; ++n) {
    Rational g1 = b1[static_cast<std::size_t>(n)] == 0 ? Rational(0)
                                                       : step * b1[static_cast<std::size_t>(n)] * eval_rf(p.R, n, k + 1, "R");
    Rational g0 = b0[static_cast<std::size_t>(n)] == 0 ? Rational(0)
                                                       : b0[static_cast<std::size_t>(n)] * eval_rf(p.R, n, k, "R");
    lhs += g1 - g0;
  }
  Rational f0 = b0[0] == 0 ? Rational(0) : b0[0] * eval_rf(p.S, 0, k, "S");
  Rational fN = b0[static_cast<std::size_t>(N)] == 0 ? Rational(0)
                                                     : b0[static_cast<std::size_t>(N)] * eval_rf(p.S, N, k, "S");
  rep.lhs = lhs;
  rep.rhs = fN - f0;
  rep.f0_zero = f0 == 0;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace wz
