#pragma once

// Text format "wzdsl-1" for hypergeometric terms:
//
//   entry    := "z=" rational "*" product
//   product  := atom (("*" | "/") atom)*
//   atom     := "poch" "(" affine ";" var ")" ["^" ["-"] integer]
//             | "(" product ")" | "1"
//   affine   := signed sum of rational monomials in {1, n, k, n/q, k/q}
//   var      := "n" | "k"
//   rational := ["-"] digits ["/" digits]
//
// Whitespace is ignored. "1" is the empty product, so the unit term prints
// as "z=1 * 1" and parses back.

#include <string>
#include <string_view>
#include <vector>

#include "wz/errors.hpp"
#include "wz/hyperterm.hpp"
#include "wz/poly2.hpp"

namespace wz {

inline constexpr std::string_view kDslVersion = "wzdsl-1";

struct SourceSpan {
  std::size_t start = 0;  // byte offsets into the input
  std::size_t end = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::vector<std::string> expected, std::string found);
  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string found_;
};

HyperTerm parse_term(std::string_view text);
std::string print_term(const HyperTerm& t);

/// "num/den" style expressions in n, k with + - * / ^ and parentheses;
/// juxtaposition such as "2n" or "3(n+1)" is multiplication.
RationalFunction parse_rational_function(std::string_view text);
/// As above, but the denominator must be a nonzero constant.
Poly2 parse_poly(std::string_view text);

}  // namespace wz
