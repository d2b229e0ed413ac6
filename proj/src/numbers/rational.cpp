#include "wz/numbers.hpp"

#include <cctype>

#include "wz/errors.hpp"

namespace wz {

Rational rational_normalize(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  Rational q = rational_normalize(Integer(std::string(num), 10), Integer(std::string(den), 10));
  return negative ? Rational(-q) : q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero();
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already coprime
}

Rational rising_factorial(const Rational& x, long n) {
  if (n < 0) throw DomainError("rising factorial with negative length");
  Integer num = 1, den = 1;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  // (p/q)_n = prod (p + j q) / q^n
  for (long j = 0; j < n; ++j) {
    num *= p + j * q;
    den *= q;
  }
  return rational_normalize(num, den);
}

long bit_length(const Integer& x) {
  if (x == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

}  // namespace wz
