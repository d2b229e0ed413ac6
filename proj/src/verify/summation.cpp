#include <algorithm>
#include <cmath>

#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz {

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first

const Rational kDelta(1, 100);

struct RoundingShortfall {};

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}
bool is_zero(const IntPoly& p) { return p.empty() || (p.size() == 1 && p[0] == 0); }
int degree(const IntPoly& p) { return is_zero(p) ? -1 : static_cast<int>(p.size()) - 1; }

// a/b and c/d with a common multiplier, so a/b = A/B exactly.
std::pair<IntPoly, IntPoly> integer_pair(const UniPoly& a, const UniPoly& b) {
  Integer l = 1;
  for (const auto* p : {&a, &b})
    for (const auto& c : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  auto conv = [&](const UniPoly& p) {
    IntPoly out;
    for (const auto& c : p) out.push_back(Integer(c * Rational(l)));
    if (out.empty()) out.push_back(0);
    trim(out);
    return out;
  };
  return {conv(a), conv(b)};
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntPoly lin(const IntPoly& a, const Integer& s, const IntPoly& b, const Integer& t) {
  IntPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += s * a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += t * b[i];
  trim(r);
  return r;
}

// Coefficients of p(x + shift).
IntPoly taylor_shift(IntPoly p, long shift) {
  const std::size_t d = p.size();
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = d - 2; ; --j) {
      p[j] += p[j + 1] * shift;
      if (j == i) break;
    }
  return p;
}

// +1 / -1 when p(N0 + x) has all coefficients of one sign (so p keeps that
// sign on [N0, inf)); 0 otherwise. `strict` also demands p(N0) != 0.
int sign_on_ray(const IntPoly& p, long n0, bool strict) {
  IntPoly s = taylor_shift(p, n0);
  bool nonneg = true, nonpos = true;
  for (const auto& c : s) {
    if (c < 0) nonneg = false;
    if (c > 0) nonpos = false;
  }
  if (strict && s[0] == 0) return 0;
  if (nonneg && !nonpos) return 1;
  if (nonpos && !nonneg) return -1;
  return 0;
}

bool nonnegative_on_ray(const IntPoly& p, long n0) { return is_zero(p) || sign_on_ray(p, n0, false) == 1; }

void eval_into(Integer& out, const IntPoly& p, long n) {
  out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    mpz_mul_si(out.get_mpz_t(), out.get_mpz_t(), n);
    out += *it;
  }
}

Rational eval(const UniPoly& p, long n) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * n + *it;
  return v;
}

struct Series {
  Rational u0;
  UniPoly a, b, c, d;  // u_{n+1} = u_n a(n)/b(n), t_n = u_n c(n)/d(n)
};

struct RatioShape {
  IntPoly P, Q;  // t_{n+1}/t_n = P(n)/Q(n)
  Rational limit;
  bool divergent = false;
};

RatioShape ratio_shape(const IntPoly& A, const IntPoly& B, const IntPoly& C, const IntPoly& D) {
  auto shift1 = [](const IntPoly& p) { return taylor_shift(p, 1); };
  RatioShape r;
  r.P = mul(mul(A, shift1(C)), D);
  r.Q = mul(mul(B, shift1(D)), C);
  int dp = degree(r.P), dq = degree(r.Q);
  if (dp > dq) r.divergent = true;
  else if (dp == dq) r.limit = rational_normalize(r.P.back(), r.Q.back());
  else r.limit = 0;
  return r;
}

// Decay exponent alpha in |t_{n+1}/t_n| = 1 - alpha/n + O(1/n^2) when the limit is -1.
Rational decay_exponent(const RatioShape& s) {
  int d = degree(s.Q);
  if (d < 1) return 0;
  // -P/Q = (q_d n^d + p'_{d-1} n^{d-1} ...) / (q_d n^d + q_{d-1} n^{d-1} ...)
  Rational pd1 = -Rational(s.P[static_cast<std::size_t>(d - 1)]);
  Rational qd1 = Rational(s.Q[static_cast<std::size_t>(d - 1)]);
  return (qd1 - pd1) / Rational(s.Q.back());
}

BigFloat fixed_to_bigfloat(const Integer& m, long bits, const Integer& err) {
  return BigFloat(m, -bits, bits + bit_length(m) + 8, err);
}

Integer ceil_double(double x) {
  Integer r;
  mpz_set_d(r.get_mpz_t(), std::ceil(x));
  return r + 1;
}

SumResult sum_direct(const Series& s, int precision, const RatioShape& shape, bool alternating, long guard) {
  auto [A, B] = integer_pair(s.a, s.b);
  auto [C, D] = integer_pair(s.c, s.d);
  const long bits = digits_to_bits(precision) + guard;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Integer target = Integer(decimal_tolerance(precision) * Rational(scale));  // allowed ulps

  // rho = p/q bounds |t_{n+1}/t_n| from the proof point on (geometric case).
  Rational rho = (3 * abs(shape.limit) + 1 - kDelta) / 4;
  const Integer rp = rho.get_num(), rq = rho.get_den();
  const long max_terms = 60000000;

  auto prove = [&](long n0) {
    int sq = sign_on_ray(shape.Q, n0, true);
    if (sq == 0) return false;
    IntPoly sQ = lin(shape.Q, sq, IntPoly{0}, 0);
    if (alternating)
      return nonnegative_on_ray(lin(sQ, 1, shape.P, sq), n0) && nonnegative_on_ray(lin(shape.P, -sq, IntPoly{0}, 0), n0);
    return nonnegative_on_ray(lin(sQ, rp, shape.P, -rq), n0) && nonnegative_on_ray(lin(sQ, rp, shape.P, rq), n0);
  };

  Integer U = Integer(s.u0 * Rational(scale));
  double errU = 1;
  Integer sum = 0, T, An, Bn, Cn, Dn, absT, tail;
  double errS = 0;
  long proved_from = -1, next_attempt = 0;
  long n = 0;
  bool exact_tail = false;
  for (;; ++n) {
    if (n > max_terms) throw InsufficientPrecision("direct summation exceeded " + std::to_string(max_terms) + " terms");
    eval_into(Cn, C, n);
    eval_into(Dn, D, n);
    if (Dn == 0) throw PoleEncountered(n, "term denominator");
    T = U * Cn;
    mpz_tdiv_q(T.get_mpz_t(), T.get_mpz_t(), Dn.get_mpz_t());
    double errT = errU * std::fabs(mpz_get_d(Cn.get_mpz_t()) / mpz_get_d(Dn.get_mpz_t())) * (1 + 1e-12) + 1;

    if (proved_from < 0 && n >= next_attempt) {
      if (prove(n)) proved_from = n;
      else next_attempt = std::max<long>(8, 2 * n);
    }
    if (proved_from >= 0) {
      absT = abs(Rational(T)).get_num() + ceil_double(errT);
      if (alternating) {
        tail = absT;
      } else {
        tail = absT * rq;
        mpz_cdiv_q(tail.get_mpz_t(), tail.get_mpz_t(), Integer(rq - rp).get_mpz_t());
      }
      if (tail + ceil_double(errS) < target) break;
    }
    sum += T;
    errS += errT;

    eval_into(An, A, n);
    eval_into(Bn, B, n);
    if (Bn == 0) throw PoleEncountered(n + 1, "term ratio denominator");
    if (An == 0) {
      exact_tail = true;  // every later term vanishes
      ++n;
      break;
    }
    U *= An;
    mpz_tdiv_q(U.get_mpz_t(), U.get_mpz_t(), Bn.get_mpz_t());
    errU = errU * std::fabs(mpz_get_d(An.get_mpz_t()) / mpz_get_d(Bn.get_mpz_t())) * (1 + 1e-12) + 1;
  }
  if (exact_tail) tail = 0;
  Integer err = ceil_double(errS) + tail;
  if (err >= target) throw RoundingShortfall{};
  SumResult r;
  r.value = fixed_to_bigfloat(sum, bits, err);
  r.tail_bound = fixed_to_bigfloat(err, bits, 0);
  r.terms_used = n;
  r.accelerated = false;
  r.precision = precision;
  return r;
}

// Cohen, Rodriguez Villegas and Zagier, Algorithm 1, in exact arithmetic:
// approximates sum (-1)^k a_k from a_0 .. a_{N-1}.
Rational crvz(const std::vector<Rational>& a, long N) {
  Integer v_prev = 2, v = 6;  // (3+sqrt8)^m + (3-sqrt8)^m
  if (N == 0) v = 2;
  for (long m = 1; m < N; ++m) {
    Integer next = 6 * v - v_prev;
    v_prev = v;
    v = next;
  }
  Rational d = rational_normalize(v, 2);
  Rational b = -1, c = -d, s = 0;
  for (long k = 0; k < N; ++k) {
    c = b - c;
    s += c * a[static_cast<std::size_t>(k)];
    b = b * Rational((k + N) * (k - N)) / (Rational(2 * k + 1, 2) * Rational(k + 1));
  }
  return s / d;
}

SumResult sum_accelerated(const Series& s, int precision) {
  const long extra = 8;
  // Start where the error bound 2|a_0| / 5.828^N drops below target. That
  // bound assumes the terms are moments of a positive measure; when they are
  // not, the difference check below catches it and N grows.
  Rational t0 = s.u0 * eval(s.c, 0) / eval(s.d, 0);
  Rational target = decimal_tolerance(precision + 2);
  const Rational base(1457, 250);  // < 3 + sqrt(8)
  long N = 1;
  Rational bound = 2 * abs(t0) / base;
  while (bound >= target) {
    bound /= base;
    ++N;
  }
  const long max_N = 3 * N + 64;

  std::vector<Rational> a;
  Rational u = s.u0;
  auto extend_to = [&](long size) {
    for (long k = static_cast<long>(a.size()); k < size; ++k) {
      Rational dk = eval(s.d, k);
      if (dk == 0) throw PoleEncountered(k, "term denominator");
      Rational t = u * eval(s.c, k) / dk;
      a.push_back(k % 2 == 0 ? t : Rational(-t));
      Rational bk = eval(s.b, k);
      if (bk == 0) throw PoleEncountered(k + 1, "term ratio denominator");
      u = u * eval(s.a, k) / bk;
    }
  };

  Rational value, err;
  for (;;) {
    extend_to(N + extra);
    value = crvz(a, N);
    Rational gap = 2 * abs(value - crvz(a, N + extra));
    err = std::max(bound, gap);
    if (err < target || N >= max_N) break;
    long step = N / 4 + extra;
    for (long i = 0; i < step; ++i) bound /= base;
    N += step;
  }
  long bits = digits_to_bits(precision) + 32;
  SumResult r;
  r.value = BigFloat::from_rational(value, bits + 8 + bit_length(floor(abs(value)) + 1)).widened(err);
  r.tail_bound = BigFloat::from_rational(r.value.radius(), 64);
  r.terms_used = N + extra;
  r.accelerated = true;
  r.precision = precision;
  if (r.value.radius() >= decimal_tolerance(precision))
    throw InsufficientPrecision("accelerated sum did not reach the requested precision");
  return r;
}

SumResult sum_impl(const Series& s, int precision, SumMethod method) {
  if (precision < 1) throw InsufficientPrecision("precision must be at least one digit");
  auto [A, B] = integer_pair(s.a, s.b);
  auto [C, D] = integer_pair(s.c, s.d);
  if (is_zero(B) || is_zero(D)) throw DivisionByZero();
  if (s.u0 == 0 || is_zero(C) || is_zero(A)) {
    // At most one nonzero term.
    Rational t0 = s.u0 == 0 || is_zero(C) ? Rational(0) : s.u0 * eval(s.c, 0) / eval(s.d, 0);
    SumResult r;
    long bits = digits_to_bits(precision) + 32;
    r.value = BigFloat::from_rational(t0, bits + bit_length(floor(abs(t0)) + 1));
    r.tail_bound = BigFloat::from_rational(r.value.radius(), 64);
    r.terms_used = 1;
    r.precision = precision;
    return r;
  }
  RatioShape shape = ratio_shape(A, B, C, D);
  if (shape.divergent || abs(shape.limit) > 1) throw Divergent("term ratio does not tend to a limit inside [-1, 1]");
  const bool geometric = abs(shape.limit) < 1 - kDelta;
  const bool alternating_tail = !geometric && shape.limit < 0;

  if (method == SumMethod::Accelerated || (method == SumMethod::Auto && alternating_tail)) {
    if (shape.limit >= 0) throw Divergent("acceleration applies to alternating series only");
    return sum_accelerated(s, precision);
  }
  if (!geometric && !alternating_tail)
    throw Divergent("term ratio tends to " + to_string(shape.limit) + "; no rigorous tail bound");

  double log2_terms;
  if (geometric) {
    double l = std::max(abs(shape.limit).get_d(), 1e-6);
    log2_terms = std::log2(precision * 3.33 / -std::log2((1 + l) / 2) + 16);
  } else {
    Rational alpha = decay_exponent(shape);
    if (alpha <= 0) throw Divergent("alternating terms do not tend to zero");
    double log10_terms = (precision + 1) / alpha.get_d();
    if (log10_terms > 7.7)
      throw InsufficientPrecision("direct alternating summation would need about 10^" +
                                  std::to_string(static_cast<int>(log10_terms)) + " terms");
    log2_terms = log10_terms * 3.33 + 2;
  }
  long guard = 64 + static_cast<long>(std::ceil(3 * log2_terms));
  for (int attempt = 0;; ++attempt) {
    try {
      return sum_direct(s, precision, shape, alternating_tail, guard);
    } catch (const RoundingShortfall&) {
      if (attempt >= 3) throw InsufficientPrecision("rounding error exceeded the requested precision");
      guard *= 2;
    }
  }
}

}  // namespace

SumResult sum_terms(const Rational& t0, const UniPoly& num, const UniPoly& den, int precision, SumMethod method) {
  return sum_impl(Series{t0, num, den, {Rational(1)}, {Rational(1)}}, precision, method);
}

SumResult sum_series(const WZPair& p, const Rational& k, int precision, SumMethod method) {
  RationalFunction q = expand(pochhammer_quotient(p.term, Var::N));
  UniPoly a = restrict_to_k(q.num, k);
  for (auto& c : a) c *= p.z();
  Series s{Rational(1), a, restrict_to_k(q.den, k), restrict_to_k(p.R.num, k), restrict_to_k(p.R.den, k)};
  return sum_impl(s, precision, method);
}

}  // namespace wz
