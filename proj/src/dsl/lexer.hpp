#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wz/dsl.hpp"

namespace wz::dsl_detail {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

/// Splits into numbers, identifiers and single-character symbols.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& t);

}  // namespace wz::dsl_detail
