#pragma once

// Sparse bivariate polynomials in n and k. Poly2 has rational coefficients;
// Poly2U has coefficients that are linear expressions in unknowns.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wz/affine.hpp"
#include "wz/linexpr.hpp"
#include "wz/numbers.hpp"

namespace wz {

/// (degree in n, degree in k)
using Monomial = std::pair<int, int>;

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LinExpr& c) { return c.is_zero(); }

Integer binomial(int n, int k);

template <class Coeff>
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly constant(const Coeff& c) { return monomial(0, 0, c); }
  static BivariatePoly monomial(int dn, int dk, const Coeff& c) {
    BivariatePoly p;
    p.add_term({dn, dk}, c);
    return p;
  }

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  Coeff coeff(int dn, int dk) const {
    auto it = terms_.find({dn, dk});
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
  }
  int degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, v == Var::N ? m.first : m.second);
    return d;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BivariatePoly operator-() const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  BivariatePoly scaled(const Rational& f) const {
    BivariatePoly r;
    if (f == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * f);
    return r;
  }

  /// p with v replaced by v + delta.
  BivariatePoly shifted(Var v, const Rational& delta) const {
    if (delta == 0) return *this;
    BivariatePoly r;
    for (const auto& [m, c] : terms_) {
      int e = v == Var::N ? m.first : m.second;
      Rational dpow = 1;
      // c * (v + delta)^e = sum_j C(e, j) delta^(e-j) v^j
      std::vector<Rational> powers(static_cast<std::size_t>(e) + 1);
      for (int i = 0; i <= e; ++i) {
        powers[static_cast<std::size_t>(i)] = dpow;
        dpow *= delta;
      }
      for (int j = 0; j <= e; ++j) {
        Rational f = Rational(binomial(e, j)) * powers[static_cast<std::size_t>(e - j)];
        Monomial mm = v == Var::N ? Monomial{j, m.second} : Monomial{m.first, j};
        r.add_term(mm, c * f);
      }
    }
    return r;
  }

 private:
  std::map<Monomial, Coeff> terms_;
};

using Poly2 = BivariatePoly<Rational>;
using Poly2U = BivariatePoly<LinExpr>;

Poly2 operator*(const Poly2& a, const Poly2& b);
Poly2U operator*(const Poly2U& a, const Poly2& b);
inline Poly2U operator*(const Poly2& a, const Poly2U& b) { return b * a; }

Poly2 poly_from_affine(const AffineForm& f);
inline Poly2 poly_var(Var v) { return poly_from_affine(AffineForm::variable(v)); }

/// Exact shift n -> n + delta or k -> k + delta.
inline Poly2 poly_shift(const Poly2& p, Var v, long delta) { return p.shifted(v, Rational(delta)); }

Rational eval_poly(const Poly2& p, const Rational& n, const Rational& k);

/// Coefficients of p(n, k0) as a polynomial in n (index = degree).
std::vector<Rational> restrict_to_k(const Poly2& p, const Rational& k0);

/// Quotient p / f when f divides p exactly, nullopt otherwise.
std::optional<Poly2> divide_exact(const Poly2& p, const AffineForm& f);

/// Coefficients in graded lexicographic order (n before k), highest first.
std::vector<std::pair<Monomial, Rational>> graded_terms(const Poly2& p);

/// Coefficient of the graded-lex leading monomial; 0 for the zero polynomial.
Rational leading_coefficient(const Poly2& p);

/// Deterministic text: graded lexicographic, e.g. "4*n^2 - 4*k^2 + 4*n + 1".
std::string to_string(const Poly2& p);
std::string to_string(const Poly2U& p);

/// Linear expression multiplying n^dn k^dk; zero if absent.
LinExpr coeff_extract(const Poly2U& p, int dn, int dk);
/// Substitutes every unknown; throws DomainError if one is unassigned.
Poly2 substitute(const Poly2U& p, const Assignment& values);
Poly2U lift(const Poly2& p);
/// Rewrites each coefficient with `f`.
template <class F>
Poly2U map_coefficients(const Poly2U& p, F&& f) {
  Poly2U r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
  return r;
}

/// num / den with den not identically zero.
struct RationalFunction {
  Poly2 num;
  Poly2 den = Poly2::constant(1);

  Rational eval(const Rational& n, const Rational& k) const;
  RationalFunction shifted(Var v, long delta) const {
    return {poly_shift(num, v, delta), poly_shift(den, v, delta)};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// Same rational function (cross-multiplication test).
bool equivalent(const RationalFunction& a, const RationalFunction& b);

}  // namespace wz
