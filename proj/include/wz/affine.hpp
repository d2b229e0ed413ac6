#pragma once

#include <string>
#include <utility>

#include "wz/numbers.hpp"

namespace wz {

enum class Var { N, K };

inline char var_name(Var v) { return v == Var::N ? 'n' : 'k'; }
inline Var other(Var v) { return v == Var::N ? Var::K : Var::N; }

/// c0 + cn*n + ck*k over the rationals.
struct AffineForm {
  Rational c0 = 0;
  Rational cn = 0;
  Rational ck = 0;

  AffineForm() = default;
  AffineForm(Rational constant, Rational n_coeff, Rational k_coeff)
      : c0(std::move(constant)), cn(std::move(n_coeff)), ck(std::move(k_coeff)) {}

  static AffineForm constant(const Rational& c) { return {c, 0, 0}; }
  static AffineForm variable(Var v) { return v == Var::N ? AffineForm{0, 1, 0} : AffineForm{0, 0, 1}; }

  const Rational& coeff(Var v) const { return v == Var::N ? cn : ck; }
  bool is_constant() const { return cn == 0 && ck == 0; }
  bool is_zero() const { return is_constant() && c0 == 0; }

  Rational eval(const Rational& n, const Rational& k) const { return c0 + cn * n + ck * k; }

  /// The form with `v` replaced by v + delta.
  AffineForm shifted(Var v, const Rational& delta) const;
  AffineForm operator+(const Rational& c) const { return {c0 + c, cn, ck}; }
  AffineForm scaled(const Rational& s) const { return {c0 * s, cn * s, ck * s}; }

  /// Splits the form as scale * primitive, where the primitive form has
  /// coprime integer coefficients and its first nonzero coefficient in the
  /// order (cn, ck, c0) is positive. Zero maps to (0, zero form).
  std::pair<Rational, AffineForm> primitive() const;
  bool is_primitive() const { return primitive().first == 1; }

  std::string to_string() const;

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.c0 == b.c0 && a.cn == b.cn && a.ck == b.ck;
  }
  /// Lexicographic on (cn, ck, c0).
  friend bool operator<(const AffineForm& a, const AffineForm& b);
};

}  // namespace wz
