#include <map>
#include <mutex>
#include <stdexcept>

#include "wz/bigfloat.hpp"

namespace wz {

namespace {

struct Split {
  Integer p, q, t;
};

// Binary splitting of the Chudnovsky series over terms [a, b), a >= 1.
Split chudnovsky_split(long a, long b) {
  if (b - a == 1) {
    Split s;
    s.p = Integer(6 * a - 5) * (2 * a - 1) * (6 * a - 1);
    s.p = -s.p;
    s.q = Integer(10939058860032000UL) * a * a * a;
    s.t = s.p * (Integer(13591409) + Integer(545140134) * a);
    return s;
  }
  long m = (a + b) / 2;
  Split l = chudnovsky_split(a, m);
  Split r = chudnovsky_split(m, b);
  return {l.p * r.p, l.q * r.q, l.t * r.q + l.p * r.t};
}

}  // namespace

BigFloat pi_chudnovsky(long digits) {
  long work = digits + 10;
  long terms = work / 14 + 2;  // each term contributes ~14.18 digits
  Integer q = 1, t = 0;
  if (terms > 1) {
    Split s = chudnovsky_split(1, terms);
    q = s.q;
    t = s.t;
  }
  BigFloat root = sqrt_rational(10005, work);
  BigFloat pi = root.mul(rational_normalize(Integer(426880) * q, Integer(13591409) * q + t));
  // Remaining terms shrink by a factor > 10^14 each; bound the truncation.
  return pi.widened(decimal_tolerance(14 * (terms - 1)));
}

namespace {

// arctan(1/x) scaled by 2^bits; returns (value, error in ulps).
std::pair<Integer, Integer> arctan_inverse(long x, long bits) {
  Integer one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Integer power = one / x;
  Integer x2 = Integer(x) * x;
  Integer sum = 0;
  long iterations = 0;
  for (long j = 0; power != 0; ++j, ++iterations) {
    Integer term = power / (2 * j + 1);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
  }
  // one truncation for the initial power, two per iteration, plus the tail
  return {sum, Integer(2 * iterations + 3)};
}

}  // namespace

BigFloat pi_machin(long digits) {
  long bits = digits_to_bits(digits) + 16;
  auto [a5, e5] = arctan_inverse(5, bits);
  auto [a239, e239] = arctan_inverse(239, bits);
  Integer m = 16 * a5 - 4 * a239;
  Integer err = 16 * e5 + 4 * e239;
  return BigFloat(m, -bits, bits + 4, err);
}

BigFloat pi_approx(long digits) {
  if (digits < 1) digits = 1;
  static std::mutex mutex;
  static std::map<long, BigFloat> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(digits); it != cache.end()) return it->second;
  BigFloat fast = pi_chudnovsky(digits);
  BigFloat check = pi_machin(digits);
  if (compare(fast, check, 0) != Ordering3::Indistinguishable)
    throw std::logic_error("pi: Chudnovsky and Machin series disagree");
  cache.emplace(digits, fast);
  return fast;
}

}  // namespace wz
