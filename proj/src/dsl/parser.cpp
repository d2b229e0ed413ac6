#include <optional>

#include "lexer.hpp"
#include "wz/dsl.hpp"

namespace wz {

using dsl_detail::describe;
using dsl_detail::Tok;
using dsl_detail::Token;
using dsl_detail::tokenize;

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const { return peek().kind == Tok::Symbol && peek().text[0] == c; }
  bool at_ident(std::string_view name) const { return peek().kind == Tok::Ident && peek().text == name; }
  bool at_end() const { return peek().kind == Tok::End; }

  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, std::move(expected), describe(peek()));
  }
  void expect_symbol(char c) {
    if (!at_symbol(c)) fail({std::string("'") + c + "'"});
    take();
  }
  void expect_ident(std::string_view name) {
    if (!at_ident(name)) fail({"'" + std::string(name) + "'"});
    take();
  }
  std::string expect_number() {
    if (peek().kind != Tok::Number) fail({"digits"});
    return take().text;
  }
  void expect_end() {
    if (!at_end()) fail({"end of input"});
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Rational parse_unsigned_rational(Cursor& c) {
  Integer num(c.expect_number());
  Integer den = 1;
  if (c.at_symbol('/')) {
    c.take();
    den = Integer(c.expect_number());
    if (den == 0) c.fail({"nonzero denominator"});
  }
  return rational_normalize(num, den);
}

Rational parse_signed_rational(Cursor& c) {
  bool negative = false;
  if (c.at_symbol('-')) {
    c.take();
    negative = true;
  }
  Rational q = parse_unsigned_rational(c);
  return negative ? Rational(-q) : q;
}

std::optional<Var> var_of(const Token& t) {
  if (t.kind != Tok::Ident) return std::nullopt;
  if (t.text == "n") return Var::N;
  if (t.text == "k") return Var::K;
  return std::nullopt;
}

// A monomial c, c*v, c v, v, c*v/q, v/q.
AffineForm parse_monomial(Cursor& c) {
  Rational coeff = 1;
  bool have_number = false;
  if (c.peek().kind == Tok::Number) {
    coeff = parse_unsigned_rational(c);
    have_number = true;
  }
  std::optional<Var> v;
  if (c.at_symbol('*') && have_number) {
    c.take();
    v = var_of(c.peek());
    if (!v) c.fail({"'n'", "'k'"});
    c.take();
  } else if (auto direct = var_of(c.peek())) {
    v = direct;
    c.take();
  }
  if (!v) {
    if (!have_number) c.fail({"digits", "'n'", "'k'"});
    return AffineForm::constant(coeff);
  }
  if (c.at_symbol('/')) {
    c.take();
    Integer q(c.expect_number());
    if (q == 0) c.fail({"nonzero denominator"});
    coeff /= Rational(q);
  }
  return AffineForm::variable(*v).scaled(coeff);
}

AffineForm parse_affine(Cursor& c) {
  AffineForm sum;
  bool first = true;
  while (true) {
    bool negative = false;
    if (c.at_symbol('+') || c.at_symbol('-')) {
      negative = c.peek().text[0] == '-';
      c.take();
    } else if (!first) {
      break;
    }
    AffineForm m = parse_monomial(c);
    if (negative) m = m.scaled(-1);
    sum = {sum.c0 + m.c0, sum.cn + m.cn, sum.ck + m.ck};
    first = false;
  }
  return sum;
}

void parse_product(Cursor& c, std::vector<PochFactor>& out, int sign);

void parse_atom(Cursor& c, std::vector<PochFactor>& out, int sign) {
  if (c.at_ident("poch")) {
    SourceSpan start = c.peek().span;
    c.take();
    c.expect_symbol('(');
    AffineForm base = parse_affine(c);
    c.expect_symbol(';');
    auto v = var_of(c.peek());
    if (!v) c.fail({"'n'", "'k'"});
    c.take();
    c.expect_symbol(')');
    long exponent = 1;
    if (c.at_symbol('^')) {
      c.take();
      bool negative = false;
      if (c.at_symbol('-')) {
        c.take();
        negative = true;
      }
      exponent = std::stol(c.expect_number());
      if (negative) exponent = -exponent;
      if (exponent == 0) c.fail({"nonzero exponent"});
    }
    if (base.coeff(*v) != 0)
      throw ParseError(start, {"base free of the raising variable"}, "'" + base.to_string() + "'");
    out.push_back(make_poch(base, *v, static_cast<int>(exponent) * sign));
    return;
  }
  if (c.at_symbol('(')) {
    c.take();
    parse_product(c, out, sign);
    c.expect_symbol(')');
    return;
  }
  if (c.peek().kind == Tok::Number && c.peek().text == "1") {
    c.take();
    return;
  }
  c.fail({"'poch'", "'('", "'1'"});
}

void parse_product(Cursor& c, std::vector<PochFactor>& out, int sign) {
  parse_atom(c, out, sign);
  while (c.at_symbol('*') || c.at_symbol('/')) {
    bool divide = c.take().text[0] == '/';
    parse_atom(c, out, divide ? -sign : sign);
  }
}

// Rational-function expressions.

RationalFunction normalized(RationalFunction f) {
  if (f.den.is_zero()) throw DivisionByZero();
  if (f.den.total_degree() == 0) {
    Rational d = f.den.coeff(0, 0);
    return {f.num.scaled(Rational(1) / d), Poly2::constant(1)};
  }
  // Denominator: integer coefficients, content 1, positive leading term.
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.den.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content = rational_normalize(num_gcd, den_lcm);
  if (leading_coefficient(f.den) < 0) content = -content;
  return {f.num.scaled(1 / content), f.den.scaled(1 / content)};
}

RationalFunction add(const RationalFunction& a, const RationalFunction& b, int sign) {
  Poly2 bn = b.num.scaled(sign);
  if (a.den == b.den) return {a.num + bn, a.den};
  return {a.num * b.den + bn * a.den, a.den * b.den};
}

RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction parse_expr(Cursor& c);

RationalFunction parse_primary(Cursor& c) {
  if (c.peek().kind == Tok::Number) {
    Integer v(c.take().text, 10);
    return {Poly2::constant(Rational(v)), Poly2::constant(1)};
  }
  if (auto v = var_of(c.peek())) {
    c.take();
    return {poly_var(*v), Poly2::constant(1)};
  }
  if (c.at_symbol('(')) {
    c.take();
    RationalFunction e = parse_expr(c);
    c.expect_symbol(')');
    return e;
  }
  c.fail({"digits", "'n'", "'k'", "'('"});
}

RationalFunction parse_power(Cursor& c) {
  RationalFunction base = parse_primary(c);
  if (!c.at_symbol('^')) return base;
  c.take();
  long e = std::stol(c.expect_number());
  RationalFunction r{Poly2::constant(1), Poly2::constant(1)};
  for (long i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

RationalFunction parse_unary(Cursor& c) {
  if (c.at_symbol('-') || c.at_symbol('+')) {
    bool negative = c.take().text[0] == '-';
    RationalFunction f = parse_unary(c);
    return negative ? RationalFunction{-f.num, f.den} : f;
  }
  return parse_power(c);
}

RationalFunction parse_term_expr(Cursor& c) {
  RationalFunction acc = parse_unary(c);
  for (;;) {
    // Juxtaposition ("2n", "3(n+1)") multiplies like '*'.
    bool implicit = var_of(c.peek()).has_value() || c.at_symbol('(');
    if (!implicit && !c.at_symbol('*') && !c.at_symbol('/')) break;
    SourceSpan at = c.peek().span;
    bool divide = !implicit && c.take().text[0] == '/';
    RationalFunction rhs = implicit ? parse_power(c) : parse_unary(c);
    if (divide) {
      if (rhs.num.is_zero()) throw ParseError(at, {"nonzero divisor"}, "division by zero");
      acc = mul(acc, {rhs.den, rhs.num});
    } else {
      acc = mul(acc, rhs);
    }
    if (acc.den.total_degree() == 0) acc = normalized(acc);
  }
  return acc;
}

RationalFunction parse_expr(Cursor& c) {
  RationalFunction acc = parse_term_expr(c);
  while (c.at_symbol('+') || c.at_symbol('-')) {
    int sign = c.take().text[0] == '-' ? -1 : 1;
    acc = add(acc, parse_term_expr(c), sign);
  }
  return acc;
}

}  // namespace

HyperTerm parse_term(std::string_view text) {
  Cursor c(text);
  c.expect_ident("z");
  c.expect_symbol('=');
  HyperTerm t;
  t.z = parse_signed_rational(c);
  if (t.z == 0) c.fail({"nonzero z"});
  c.expect_symbol('*');
  parse_product(c, t.factors, 1);
  c.expect_end();
  return t;
}

RationalFunction parse_rational_function(std::string_view text) {
  Cursor c(text);
  RationalFunction f = parse_expr(c);
  c.expect_end();
  return normalized(f);
}

Poly2 parse_poly(std::string_view text) {
  RationalFunction f = parse_rational_function(text);
  if (f.den.total_degree() != 0)
    throw ParseError(SourceSpan{0, text.size(), 1, 1}, {"polynomial"}, "rational function");
  return f.num;
}

}  // namespace wz
