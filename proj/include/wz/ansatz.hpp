#pragma once

// Undetermined-coefficient search for WZ pairs G = z^n y^k B R, F = z^n y^k B S
// with
//   R = ((a+b n) P_r(n,0) + k U(n,k)) / P_r(n,k)
//   S = n V(n,k) / Q_s(n,k)
// where P_r and Q_s collect the quotient denominator factors that do not
// vanish at (-1,0) and (0,-1) respectively.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wz/factored.hpp"
#include "wz/hyperterm.hpp"
#include "wz/linexpr.hpp"
#include "wz/poly2.hpp"
#include "wz/target.hpp"

namespace wz {

struct DenomSplit {
  /// Factors (with multiplicity) not vanishing at the test point.
  std::vector<std::pair<AffineForm, int>> kept;
  /// Factors vanishing at the test point.
  std::vector<std::pair<AffineForm, int>> dropped;
  /// Total degree of the product of kept factors.
  int degree = 0;
};

DenomSplit split_denominators(const FactoredRational& q, const Rational& n0, const Rational& k0);

/// A rational template factor * polynomial whose coefficients may involve
/// unknowns. For R the factor is 1/P_r(n,k), for S it is 1/Q_s(n,k).
struct Template {
  FactoredRational factor;
  Poly2U numerator;
};

struct Ansatz {
  int degree = 1;
  int r = 0;
  int s = 0;
  Template R;
  Template S;
  /// d's, then e's, then "y"; each group in graded order.
  std::vector<std::string> unknowns;
  /// Shift applied to k in the P_r factors indexing R's denominator.
  long k_shift = 0;
};

/// Builds the templates. U ranges over monomials of total degree <= r*degree,
/// V over total degree <= s*degree. `k_shift` replaces P_r(n,k) by
/// P_r(n,k+k_shift) in the denominator (0 reproduces the published pairs).
Ansatz build_ansatz(const DenomSplit& split_n, const DenomSplit& split_k, const Integer& a, const Integer& b,
                    int degree = 1, long k_shift = 0);

/// Convenience: quotients of t, both splits, then build_ansatz.
Ansatz ansatz_for(const HyperTerm& t, const Integer& a, const Integer& b, int degree = 1, long k_shift = 0);

/// y Q_k R(n,k+1) - R - z Q_n S(n+1,k) + S, cleared by the least common
/// denominator, with y*d_ij linearized to w_ij and the y-multiple of the
/// known part carried by the unknown y.
Poly2U assemble_H(const HyperTerm& t, const Ansatz& ans, const Rational& z);

struct Solution {
  Rational y;
  std::map<std::pair<int, int>, Rational> d;
  std::map<std::pair<int, int>, Rational> e;
  /// All unknown values, including the w_ij.
  Assignment values;
};
struct NoSolution {
  std::string reason;
};
struct Underdetermined {
  std::vector<std::string> free;
};
using SolveOutcome = std::variant<Solution, NoSolution, Underdetermined>;

/// Result of exact Gaussian elimination of a linear system.
struct LinearSolve {
  bool consistent = true;
  Assignment pinned;              // unknowns with a unique value
  std::vector<std::string> free;  // free parameters
};
LinearSolve solve_linear(const std::vector<LinExpr>& equations);

/// Every coefficient of h set to zero. Throws InconsistentBilinear when the
/// unique linear solution violates w_ij = y d_ij.
SolveOutcome solve_H(const Poly2U& h);

/// R and S after substituting a solution (denominators expanded).
RationalFunction instantiate(const Template& tpl, const Assignment& values);

// ---------------------------------------------------------------------------
// Search families

enum class Family { Bin1, Bin2, Bin3 };
enum class DShape { Standard, Half, Other };

struct FamilySpec {
  Family family = Family::Bin1;
  DShape d_shape = DShape::Standard;
  /// The t of (t)_k (1-t)_k / (1)_k^2 for the standard D(k).
  Rational t = Rational(1, 2);
};

/// Slots j1..j5 for bin1, j1..j7 for bin2/bin3.
int family_slots(Family f);

/// B(n,k) for one j-assignment. When target.s != 1/2, j3 is forced to j2.
HyperTerm family_term(const FamilySpec& spec, const SeriesTarget& target, const std::vector<Rational>& j);

/// "j1:-1,0,1 j4:1" style; slots not mentioned get `default_grid()`.
std::vector<std::vector<Rational>> parse_grid(const std::string& text, int slots);
std::vector<Rational> default_grid();

struct CandidateLog {
  std::vector<Rational> j;
  std::string status;  // "solved", "prefilter", "no-solution", ...
  std::string detail;
};

struct DiscoveredPair {
  std::vector<Rational> j;
  HyperTerm term;  // with concrete y
  RationalFunction R;
  RationalFunction S;
};

struct DiscoverOptions {
  int degree = 1;
  int jobs = 1;
  int prefilter_digits = 30;
  long k_shift = 0;
};

struct DiscoverResult {
  std::vector<DiscoveredPair> pairs;
  std::vector<CandidateLog> log;
};

/// Runs the whole strategy on every grid point; output sorted by j-vector.
/// Each reported pair has passed an exact WZ re-check.
DiscoverResult discover(const FamilySpec& spec, const SeriesTarget& target,
                        const std::vector<std::vector<Rational>>& grid, const DiscoverOptions& options = {});

}  // namespace wz
