#include "lexer.hpp"

#include <cctype>

namespace wz {

namespace {

std::string expected_text(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
  return s;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::vector<std::string> expected, std::string found)
    : Error("parse error at line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
            ": expected " + expected_text(expected) + ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace dsl_detail {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t j = 0; j < count; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.span = {i, i, line, column};
    std::size_t len = 1;
    if (std::isdigit(c)) {
      t.kind = Tok::Number;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
    } else if (std::isalpha(c) || c == '_') {
      t.kind = Tok::Ident;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
        ++len;
    } else {
      t.kind = Tok::Symbol;
    }
    t.text = std::string(text.substr(i, len));
    t.span.end = i + len;
    out.push_back(t);
    advance(len);
  }
  Token end;
  end.kind = Tok::End;
  end.span = {text.size(), text.size(), line, column};
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

}  // namespace dsl_detail
}  // namespace wz
