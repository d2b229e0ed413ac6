#include "wz/ansatz.hpp"

namespace wz {

DenomSplit split_denominators(const FactoredRational& q, const Rational& n0, const Rational& k0) {
  DenomSplit out;
  for (const auto& [f, mult] : q.denominator_factors()) {
    if (f.eval(n0, k0) != 0) {
      out.kept.emplace_back(f, mult);
      out.degree += mult;  // affine factors have degree one
    } else {
      out.dropped.emplace_back(f, mult);
    }
  }
  return out;
}

}  // namespace wz
