#pragma once

#include "wz/numbers.hpp"

namespace wz {

/// The Ramanujan-type series sum z^n B(n) (a + b n) = c / pi being proved.
/// Only c^2 is stored, since c itself is generally irrational.
struct SeriesTarget {
  Rational s = Rational(1, 2);
  Rational z;
  Integer a;
  Integer b;
  Rational c_squared;
};

}  // namespace wz
