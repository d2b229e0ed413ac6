#include <mpfr.h>

#include <algorithm>
#include <set>
#include <vector>

#include "wz/bigfloat.hpp"
#include "wz/errors.hpp"
#include "wz/hyperterm.hpp"

namespace wz {

namespace {

constexpr int kLatticeDepth = 12;

std::vector<Rational> sorted_candidates(std::set<Rational> ks) {
  std::vector<Rational> out(ks.begin(), ks.end());
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
    Rational aa = abs(a), ab = abs(b);
    return aa != ab ? aa < ab : a < b;
  });
  return out;
}

bool is_nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }

// Net zero order (negative = pole) of the summand at k = k_star as a
// function of n. Each entry (threshold, order) applies for n > threshold.
std::vector<std::pair<long, int>> orders_at(const HyperTerm& t, const Rational& k_star) {
  std::vector<std::pair<long, int>> contributions;
  for (const auto& f : t.factors) {
    if (f.var == Var::N) {
      if (f.base.ck == 0) continue;
      Rational b = f.base.c0 + f.base.ck * k_star;
      if (is_nonpositive_integer(b)) contributions.emplace_back(-b.get_num().get_si(), f.exponent);
    } else if (f.base.cn == 0) {
      // Gamma(x + k) has a simple pole where x + k is a non-positive integer.
      if (is_nonpositive_integer(f.base.c0 + k_star)) contributions.emplace_back(-1, -f.exponent);
    }
  }
  return contributions;
}

}  // namespace

PrefilterResult pole_prefilter(const HyperTerm& t) {
  std::set<Rational> lines;
  for (const auto& f : t.factors) {
    if (f.var != Var::N || f.exponent > 0 || f.base.ck == 0) continue;
    for (int m = 0; m < kLatticeDepth; ++m) lines.insert((-f.base.c0 - m) / f.base.ck);
  }
  for (const Rational& k_star : sorted_candidates(lines)) {
    auto contributions = orders_at(t, k_star);
    long last = 0;
    for (const auto& [threshold, order] : contributions) last = std::max(last, threshold + 1);
    for (long n = 0; n <= last; ++n) {
      int total = 0;
      for (const auto& [threshold, order] : contributions)
        if (n > threshold) total += order;
      if (total < 0)
        return PrefilterResult::reject(k_star, "summand n=" + std::to_string(n) + " has a pole of order " +
                                                   std::to_string(-total) + " at k=" + to_string(k_star));
    }
  }
  return PrefilterResult::accept("no uncompensated pole line");
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void set_rational(mpfr_ptr out, const Rational& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

Rational to_rational(mpfr_srcptr x) {
  mpz_t m;
  mpz_init(m);
  mpfr_exp_t e = mpfr_get_z_2exp(m, x);
  Integer mant(m);
  mpz_clear(m);
  Rational r(mant);
  Integer p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r * Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
  return r / Rational(p);
}

// Best rational approximation with denominator <= bound (continued fraction).
Rational best_approximation(const Rational& x, const Integer& bound) {
  Integer h_prev = 1, h = floor(x);
  Integer k_prev = 0, k = 1;
  Rational rest = x - Rational(h);
  while (rest != 0) {
    Rational inv = Rational(1) / rest;
    Integer a = floor(inv);
    Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    if (k_next > bound) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - Rational(a);
  }
  return Rational(h, k);
}

}  // namespace

PrefilterResult terminating_prefilter(const HyperTerm& t, const SeriesTarget& target, int digits) {
  std::set<Rational> zeros;
  for (const auto& f : t.factors)
    if (f.var == Var::N && f.exponent > 0 && f.base.ck != 0) zeros.insert(-f.base.c0 / f.base.ck);
  if (zeros.empty()) return PrefilterResult::accept("no numerator base vanishes at a rational k");
  if (digits < 20) throw InsufficientPrecision("terminating prefilter needs at least 20 digits");

  // MPFR caches constants per thread; discovery workers are short-lived.
  struct CacheRelease {
    ~CacheRelease() { mpfr_free_cache(); }
  } release;
  const mpfr_prec_t bits = digits_to_bits(digits) + 64;
  const Rational tolerance = decimal_tolerance(digits - 5);
  const Integer height = 1000000;

  for (const Rational& k_star : sorted_candidates(zeros)) {
    // A pole of the summand at k* is the other prefilter's business.
    bool skip = false;
    for (const auto& f : t.factors) {
      if (f.var == Var::N && f.exponent < 0 && f.base.ck != 0 &&
          is_nonpositive_integer(f.base.c0 + f.base.ck * k_star))
        skip = true;
      if (f.var == Var::K && f.base.cn != 0) skip = true;
    }
    if (skip) continue;

    // pi * D(k*) with D the product of k-raised factors at n = 0.
    MpfrValue value(bits), arg(bits), g(bits), pi(bits);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set(value.get(), pi.get(), MPFR_RNDN);
    for (const auto& f : t.factors) {
      if (f.var != Var::K) continue;
      const Rational& x = f.base.c0;
      if (is_nonpositive_integer(x) || is_nonpositive_integer(x + k_star)) {
        skip = true;  // Gamma pole: the n = 0 term is 0 or infinite
        break;
      }
      const std::pair<Rational, int> parts[] = {{Rational(x + k_star), 1}, {x, -1}};
      for (const auto& [a, sign] : parts) {
        set_rational(arg.get(), a);
        mpfr_gamma(g.get(), arg.get(), MPFR_RNDN);
        int e = sign * f.exponent;
        for (int i = 0; i < std::abs(e); ++i) {
          if (e > 0)
            mpfr_mul(value.get(), value.get(), g.get(), MPFR_RNDN);
          else
            mpfr_div(value.get(), value.get(), g.get(), MPFR_RNDN);
        }
      }
    }
    if (skip) continue;
    mpfr_sqr(value.get(), value.get(), MPFR_RNDN);
    Rational square = to_rational(value.get());
    Rational guess = best_approximation(square, height);
    Rational scale = std::max(Rational(1), abs(square));
    if (abs(square - guess) > tolerance * scale)
      return PrefilterResult::reject(
          k_star, "series terminates at n=0 for k=" + to_string(k_star) + "; (pi*term)^2 ~ " +
                      std::to_string(square.get_d()) + " is not a rational of height <= 10^6 (target c^2=" +
                      to_string(target.c_squared) + ")");
  }
  return PrefilterResult::accept("every terminating specialization gives rational (pi*term)^2");
}

}  // namespace wz
