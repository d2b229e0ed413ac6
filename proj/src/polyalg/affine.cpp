#include "wz/affine.hpp"

namespace wz {

AffineForm AffineForm::shifted(Var v, const Rational& delta) const {
  AffineForm r = *this;
  r.c0 += coeff(v) * delta;
  return r;
}

std::pair<Rational, AffineForm> AffineForm::primitive() const {
  if (is_zero()) return {Rational(0), AffineForm{}};
  Integer lcm_den = 1;
  for (const Rational* c : {&cn, &ck, &c0}) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c->get_den_mpz_t());
  Integer g = 0;
  for (const Rational* c : {&cn, &ck, &c0}) {
    Integer v = c->get_num() * (lcm_den / c->get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  // value = (g / lcm_den) * integer form
  Rational scale(g, lcm_den);
  scale.canonicalize();
  const Rational& lead = cn != 0 ? cn : (ck != 0 ? ck : c0);
  if (lead < 0) scale = -scale;
  return {scale, scaled(Rational(1) / scale)};
}

namespace {

void append_term(std::string& out, const Rational& c, const char* name) {
  if (c == 0) return;
  bool negative = c < 0;
  Rational a = negative ? Rational(-c) : c;
  if (!out.empty())
    out += negative ? "-" : "+";
  else if (negative)
    out += "-";
  if (name == nullptr) {
    out += to_string(a);
    return;
  }
  const Integer& p = a.get_num();
  const Integer& q = a.get_den();
  if (p != 1) out += p.get_str() + "*";
  out += name;
  if (q != 1) out += "/" + q.get_str();
}

}  // namespace

std::string AffineForm::to_string() const {
  std::string out;
  append_term(out, c0, nullptr);
  append_term(out, cn, "n");
  append_term(out, ck, "k");
  return out.empty() ? "0" : out;
}

bool operator<(const AffineForm& a, const AffineForm& b) {
  if (a.cn != b.cn) return a.cn < b.cn;
  if (a.ck != b.ck) return a.ck < b.ck;
  return a.c0 < b.c0;
}

}  // namespace wz
