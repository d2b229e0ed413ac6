#pragma once

// Hypergeometric terms z^n y^k B(n,k) with B a product of Pochhammer
// symbols whose bases are affine in n and k.

#include <optional>
#include <string>
#include <vector>

#include "wz/affine.hpp"
#include "wz/factored.hpp"
#include "wz/target.hpp"

namespace wz {

/// (base)_var ^ exponent. The base never involves its own raising variable.
struct PochFactor {
  AffineForm base;
  Var var = Var::N;
  int exponent = 1;

  friend bool operator==(const PochFactor& a, const PochFactor& b) {
    return a.var == b.var && a.base == b.base && a.exponent == b.exponent;
  }
  friend bool operator<(const PochFactor& a, const PochFactor& b);
};

/// Validates the invariants; throws DomainError.
PochFactor make_poch(const AffineForm& base, Var var, int exponent = 1);

struct HyperTerm {
  Rational z = 1;
  /// nullopt stands for the distinguished unknown "y".
  std::optional<Rational> y;
  std::vector<PochFactor> factors;

  /// Factors sorted by (var, base, exponent); the canonical multiset order.
  std::vector<PochFactor> sorted_factors() const;
  bool is_unit() const { return factors.empty(); }

  /// Structural equality: same z, same y, same factor multiset. Factors are
  /// not merged, so poch(1;n)/poch(1;n) differs from the empty product.
  friend bool operator==(const HyperTerm& a, const HyperTerm& b) {
    return a.z == b.z && a.y == b.y && a.sorted_factors() == b.sorted_factors();
  }
};

struct GammaAtom {
  AffineForm argument;
  int exponent = 0;
  friend bool operator==(const GammaAtom& a, const GammaAtom& b) {
    return a.argument == b.argument && a.exponent == b.exponent;
  }
};

/// (x)_v^e  ->  Gamma(x+v)^e * Gamma(x)^-e, one pair per factor.
std::vector<GammaAtom> to_gamma(const HyperTerm& t);

/// B(n+1,k)/B(n,k) or B(n,k+1)/B(n,k) without the geometric part, found by
/// balancing Gamma atoms within integer-difference classes. Throws
/// NotHypergeometric if a class does not balance.
FactoredRational pochhammer_quotient(const HyperTerm& t, Var v);

struct ShiftQuotient {
  FactoredRational value;
  /// For var = k with symbolic y: the true quotient is y * value.
  bool times_symbolic_y = false;
};

/// The quotient including z (var = n) or y (var = k).
ShiftQuotient shift_quotient(const HyperTerm& t, Var v);

/// Exact value of the n-raised factors at integer n >= 0 and rational k.
/// Throws PoleEncountered when a denominator factor vanishes.
Rational eval_n_part(const HyperTerm& t, long n, const Rational& k);
/// Exact value of the k-raised factors at integer k >= 0 and integer n.
Rational eval_k_part(const HyperTerm& t, long n, long k);
/// B(n,k) = n-part * k-part at integers n, k >= 0.
Rational eval_b(const HyperTerm& t, long n, long k);

/// True if no k-raised factor has a base depending on n.
bool k_part_is_n_free(const HyperTerm& t);

struct PrefilterResult {
  bool accepted = true;
  std::optional<Rational> witness;
  std::string detail;

  static PrefilterResult accept(std::string detail = {}) { return {true, std::nullopt, std::move(detail)}; }
  static PrefilterResult reject(Rational k, std::string detail) { return {false, std::move(k), std::move(detail)}; }
};

/// Rejects B when some vanishing line k = k* of an n-raised denominator
/// factor produces a pole of a summand that no numerator zero (n-raised
/// numerator factor or k-raised Gamma zero) compensates.
PrefilterResult pole_prefilter(const HyperTerm& t);

/// Rejects B when at some k* killing an n-raised numerator factor the series
/// collapses to its n = 0 term and (pi * term)^2 is not a rational of height
/// <= 10^6 at `digits` precision. Rational factors of the surviving term
/// (R(0,k*), a power of a rational y) do not change the outcome.
/// Throws InsufficientPrecision when digits < 20.
PrefilterResult terminating_prefilter(const HyperTerm& t, const SeriesTarget& target, int digits);

}  // namespace wz
