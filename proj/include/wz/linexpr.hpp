#pragma once

// Linear expressions in named unknowns. The ansatz uses the naming scheme
//   d{i}{j}  coefficient of n^i k^j in U (numerator correction of R)
//   e{i}{j}  coefficient of n^i k^j in V (numerator of S / n)
//   w{i}{j}  the linearized product y * d{i}{j}
//   y        the geometric ratio in k
// with an underscore separator (d{i}_{j}) once an index reaches 10.

#include <map>
#include <string>
#include <vector>

#include "wz/numbers.hpp"

namespace wz {

using Assignment = std::map<std::string, Rational>;

class LinExpr {
 public:
  LinExpr() = default;
  LinExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT(implicit)
  LinExpr(int constant) : constant_(constant) {}                  // NOLINT(implicit)

  static LinExpr symbol(const std::string& name, const Rational& coeff = 1);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::string& name) const;
  std::vector<std::string> symbols() const;

  bool is_zero() const { return constant_ == 0 && terms_.empty(); }
  bool is_constant() const { return terms_.empty(); }

  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator-=(const LinExpr& other);
  LinExpr& operator*=(const Rational& factor);
  LinExpr operator-() const;
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& f) { return a *= f; }
  friend LinExpr operator*(const Rational& f, LinExpr a) { return a *= f; }
  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  /// Throws DomainError if a symbol is unassigned.
  Rational eval(const Assignment& values) const;
  /// Replaces assigned symbols by their values; leaves the rest symbolic.
  LinExpr partial_eval(const Assignment& values) const;
  LinExpr substitute(const std::map<std::string, LinExpr>& replacement) const;

  std::string to_string() const;

 private:
  Rational constant_ = 0;
  std::map<std::string, Rational> terms_;
};

std::string unknown_name(char family, int i, int j);

}  // namespace wz
