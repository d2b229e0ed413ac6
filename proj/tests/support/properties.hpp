#pragma once

#include <cstdint>
#include <string>

#include "wz/hyperterm.hpp"

namespace wzprop {

struct Outcome {
  bool ok = true;
  long cases = 0;
  std::string failure;  // first counterexample, empty when ok

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
};

/// print -> parse -> print is a fixed point and parse(print(t)) == t for
/// every catalog term.
Outcome dsl_round_trip_catalog();

/// Random affine-factor products and random polynomials in the same run.
Outcome poly2_laws(int cases, std::uint64_t seed);
Outcome factored_laws(int cases, std::uint64_t seed);

/// B(n+1,k)/B(n,k) and B(n,k+1)/B(n,k) from the Gamma-balanced quotient
/// against direct rising-factorial evaluation at `points` integer points.
Outcome quotient_vs_direct(const wz::HyperTerm& t, int points, std::uint64_t seed);
Outcome quotient_vs_direct_catalog(int points, std::uint64_t seed);

}  // namespace wzprop
