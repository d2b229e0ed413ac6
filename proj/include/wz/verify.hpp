#pragma once

// Certification of WZ pairs and numerical evaluation of the series they
// prove. Everything on the symbolic side is exact; the numerical side tracks
// rigorous error bounds except where a report is labelled as evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wz/bigfloat.hpp"
#include "wz/hyperterm.hpp"
#include "wz/poly2.hpp"

namespace wz {

/// G = z^n y^k B R, F = z^n y^k B S with z and y taken from `term`.
struct WZPair {
  std::string id;
  HyperTerm term;  // y must be concrete
  RationalFunction R;
  RationalFunction S;
  std::string provenance;

  const Rational& z() const { return term.z; }
  const Rational& y() const;

  friend bool operator==(const WZPair& a, const WZPair& b) {
    return a.id == b.id && a.term == b.term && a.R == b.R && a.S == b.S && a.provenance == b.provenance;
  }
};

/// Same term, R and S; id and provenance ignored.
bool same_pair(const WZPair& a, const WZPair& b);

struct WzCheck {
  bool certified = false;
  /// Cleared numerator of F(n+1,k)-F(n,k)-G(n,k+1)+G(n,k) over z^n y^k B(n,k).
  Poly2 residual;
};

/// Exact test of F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k). Denominators are cleared
/// by plain products, independently of the ansatz code path.
WzCheck check_wz_exact(const WZPair& p);

struct Certificate {
  RationalFunction C;  // R/S with common affine factors removed
  int spot_checks = 0;
};

/// C = R/S. Checks C*S = R at 20 exact points drawn from `seed`.
/// Throws ZeroS when S vanishes identically.
Certificate certificate(const WZPair& p, std::uint64_t seed = 0);

/// Affine factors of a polynomial that is a product of affine forms times a
/// constant; nullopt when p does not split that way.
std::optional<FactoredRational> affine_factorization(const Poly2& p);

struct TelescopeReport {
  long N = 0;
  Rational k;
  bool holds = false;
  bool f0_zero = false;
  /// sum_{n<N} [G(n,k+1) - G(n,k)] and F(N,k) - F(0,k), both divided by
  /// the nonzero factor y^k K(k) (K = the k-raised part of B).
  Rational lhs;
  Rational rhs;
};

/// Exact finite telescoping identity. Throws PoleEncountered.
TelescopeReport telescope_partial(const WZPair& p, long N, const Rational& k);

enum class SumMethod { Auto, Direct, Accelerated };

struct SumResult {
  BigFloat value;
  BigFloat tail_bound;  // bound on |true sum - value|, all error sources
  long terms_used = 0;
  bool accelerated = false;
  int precision = 0;
};

/// Univariate polynomial in n, lowest degree first.
using UniPoly = std::vector<Rational>;

/// sum_{n>=0} t_n with t_{n+1} = t_n * num(n)/den(n), to `precision` digits.
/// Throws Divergent when no rigorous tail bound can be established.
SumResult sum_terms(const Rational& t0, const UniPoly& num, const UniPoly& den, int precision,
                    SumMethod method = SumMethod::Auto);

/// sum_{n>=0} z^n B_n(n,k) R(n,k), where B_n is the n-raised part of B. This
/// is sum_n G(n,k) divided by y^k times the k-raised part.
SumResult sum_series(const WZPair& p, const Rational& k, int precision, SumMethod method = SumMethod::Auto);

/// RHS shape c/pi * geom^k * (1)_k^2 / ((t)_k (1-t)_k).
struct RhsSpec {
  Rational c_squared;
  Rational geom = 1;
  Rational t = Rational(1, 2);
};

Rational rhs_factor(const RhsSpec& rhs, long k);

struct MatchResult {
  bool matched = false;
  Rational rho;
  BigFloat square;  // (pi * value / rho)^2
  Rational delta;   // |center(square) - c^2|
  Rational tolerance;
};

/// Tests |(pi*value/rho(k))^2 - c^2| < 10^-(precision-5). Throws
/// InsufficientPrecision when the error radius alone exceeds the tolerance.
MatchResult match_pi(const SumResult& sum, const RhsSpec& rhs, long k);

struct ConstancyReport {
  bool consistent = false;
  std::vector<long> ks;
  /// Normalized sums y^k K(k) * value, i.e. sum_n G(n,k).
  std::vector<BigFloat> constants;
  std::string label;  // always marks the result as numerical evidence
};

ConstancyReport constancy_check(const WZPair& p, const std::vector<long>& ks, int precision);

/// (1 - 4z)^-1, the square of sum_n z^n C(2n,n).
Rational central_binomial_square(const Rational& z);

struct LimitReport {
  bool applicable = false;
  std::string reason;
  Rational z_prime;        // argument of the central binomial series
  Rational constant_sq;    // (pi * lim sum)^2, exact
  int sign = 1;
  BigFloat series_value;   // numeric sum of z'^n C(2n,n)
  bool series_matches = false;
  std::string label;
};

/// k -> infinity limit of sum_n G(n,k) when the termwise limit is a
/// central binomial series.
LimitReport limit_constant_check(const WZPair& p, int precision);

}  // namespace wz
