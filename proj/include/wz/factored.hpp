#pragma once

#include <map>
#include <string>
#include <vector>

#include "wz/affine.hpp"
#include "wz/poly2.hpp"

namespace wz {

/// scale * prod f_i^e_i over primitive affine forms f_i. Identical factors
/// are merged, zero exponents are dropped and constants fold into the scale,
/// so multiset cancellation is just exponent addition.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(Rational scale);
  /// f^exponent; f must not be the zero form.
  FactoredRational(const AffineForm& f, int exponent);

  const Rational& scale() const { return scale_; }
  const std::map<AffineForm, int>& factors() const { return factors_; }

  /// Factors with positive exponents (numerator) / negated negative ones.
  std::vector<std::pair<AffineForm, int>> numerator_factors() const;
  std::vector<std::pair<AffineForm, int>> denominator_factors() const;

  int exponent_of(const AffineForm& primitive_form) const;
  bool is_constant() const { return factors_.empty(); }

  void multiply(const AffineForm& f, int exponent);
  FactoredRational& operator*=(const FactoredRational& other);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  FactoredRational inverse() const;
  FactoredRational scaled(const Rational& s) const;
  FactoredRational shifted(Var v, const Rational& delta) const;

  /// Exact value; throws DivisionByZero when a denominator factor vanishes.
  Rational eval(const Rational& n, const Rational& k) const;

  friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
    return a.scale_ == b.scale_ && a.factors_ == b.factors_;
  }

  std::string to_string() const;

 private:
  Rational scale_ = 1;
  std::map<AffineForm, int> factors_;
};

FactoredRational factored_mul(const FactoredRational& a, const FactoredRational& b);

/// Product of the given factors as a polynomial (no scale).
Poly2 product_poly(const std::vector<std::pair<AffineForm, int>>& factors);

/// numerator / denominator with the scale split as num(scale)/den(scale);
/// the denominator has a positive graded-lex leading coefficient.
RationalFunction expand(const FactoredRational& f);

}  // namespace wz
