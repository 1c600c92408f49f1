#include "cyclic/constants.hpp"

#include <gmp.h>

#include <cmath>
#include <deque>
#include <mutex>
#include <string>

namespace cyclic {

namespace {

constexpr double kLog2TwoPi = 2.651496129472319;  // log2(2*pi)
constexpr double kInvLn2 = 1.4426950408889634;
constexpr unsigned long kMaxBernoulliIndex = 1024;

struct RationalSlot {
  mpq_t q;
  RationalSlot() { mpq_init(q); }
  ~RationalSlot() { mpq_clear(q); }
  RationalSlot(const RationalSlot&) = delete;
  RationalSlot& operator=(const RationalSlot&) = delete;
};

// Exact Bernoulli numbers B_0, B_1, ... via the defining recurrence
//   B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j.
class BernoulliCache {
public:
  void get(unsigned long n, mpq_t out) {
    if (n > kMaxBernoulliIndex)
      throw capacity_error("Bernoulli index " + std::to_string(n) +
                           " exceeds cache limit " + std::to_string(kMaxBernoulliIndex));
    std::lock_guard<std::mutex> lock(mu_);
    while (vals_.size() <= n) extend_locked();
    mpq_set(out, vals_[n].q);
  }

private:
  void extend_locked() {
    const unsigned long m = vals_.size();
    vals_.emplace_back();
    mpq_ptr bm = vals_[m].q;
    if (m == 0) {
      mpq_set_ui(bm, 1, 1);
      return;
    }
    mpq_t acc, term;
    mpz_t binom;
    mpq_init(acc);
    mpq_init(term);
    mpz_init(binom);
    for (unsigned long j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;  // odd Bernoulli numbers past B_1 vanish
      mpz_bin_uiui(binom, m + 1, j);
      mpq_set_z(term, binom);
      mpq_mul(term, term, vals_[j].q);
      mpq_add(acc, acc, term);
    }
    mpq_set_ui(term, m + 1, 1);
    mpq_div(acc, acc, term);
    mpq_neg(bm, acc);
    mpq_clear(acc);
    mpq_clear(term);
    mpz_clear(binom);
  }

  std::mutex mu_;
  std::deque<RationalSlot> vals_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

// log2 |B_{2k}| estimated from |B_{2k}| ~ 2 (2k)! / (2 pi)^{2k}.
double log2_abs_bernoulli(unsigned long two_k) {
  return 1.0 + std::lgamma(static_cast<double>(two_k) + 1.0) * kInvLn2 -
         static_cast<double>(two_k) * kLog2TwoPi;
}

}  // namespace

PrecReal euler_gamma(long precision_bits) {
  if (precision_bits < PrecReal::kMinPrecision)
    throw usage_error("precision_bits must be at least 64");
  const long work = precision_bits + 32;
  const unsigned long s = precision_bits <= 512 ? 12 : (precision_bits <= 2048 ? 16 : 20);

  // Smallest m whose first omitted term B_{2m+2}/((2m+2) n^{2m+2}) is below 2^-(prec+14).
  unsigned long m = 1;
  while (true) {
    const unsigned long k = m + 1;
    const double est = log2_abs_bernoulli(2 * k) -
                       std::log2(static_cast<double>(2 * k)) -
                       static_cast<double>(2 * k) * static_cast<double>(s);
    if (est <= -static_cast<double>(precision_bits + 14)) break;
    if (++m > 400)
      throw capacity_error("euler_gamma: precision beyond supported range");
  }

  mpfr_t acc, t;
  mpfr_init2(acc, work);
  mpfr_init2(t, work);

  // H_n, n = 2^s
  const unsigned long n = 1ul << s;
  mpfr_set_zero(acc, 1);
  for (unsigned long i = 1; i <= n; ++i) {
    mpfr_set_ui(t, i, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }

  // - log n
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_mul_2ui(t, t, s, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_sub(acc, acc, t, MPFR_RNDN);

  // - 1/(2n), exact
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_div_2ui(t, t, s + 1, MPFR_RNDN);
  mpfr_sub(acc, acc, t, MPFR_RNDN);

  // + sum_{k=1..m} B_{2k} / (2k n^{2k})
  mpq_t b, scaled;
  mpq_init(b);
  mpq_init(scaled);
  for (unsigned long k = 1; k <= m; ++k) {
    bernoulli_cache().get(2 * k, b);
    mpq_set_ui(scaled, 2 * k, 1);
    mpq_div(scaled, b, scaled);
    mpfr_set_q(t, scaled, MPFR_RNDN);
    mpfr_div_2ui(t, t, 2 * k * s, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  mpq_clear(b);
  mpq_clear(scaled);

  PrecReal result(precision_bits);
  mpfr_set(result.raw(), acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(t);
  return result;
}

PrecReal zeta(long k, long precision_bits) {
  if (k < 2) throw usage_error("zeta requires k >= 2, got " + std::to_string(k));
  if (precision_bits < PrecReal::kMinPrecision)
    throw usage_error("precision_bits must be at least 64");
  const long work = precision_bits + 32;
  const double target = -static_cast<double>(precision_bits + 15);
  const double lgk = std::lgamma(static_cast<double>(k));

  unsigned long j = precision_bits <= 512 ? 10 : (precision_bits <= 2048 ? 12 : 13);
  unsigned long m = 0;
  for (;; ++j) {
    if (j > 16) throw capacity_error("zeta: precision beyond supported range");
    bool found = false;
    for (m = 1; m <= 400; ++m) {
      // first omitted term: B_{2m+2}/(2m+2)! * k(k+1)...(k+2m) * n^{-k-2m-1}
      const double est =
          1.0 - static_cast<double>(2 * m + 2) * kLog2TwoPi +
          (std::lgamma(static_cast<double>(k + 2 * m + 1)) - lgk) * kInvLn2 -
          static_cast<double>(k + 2 * m + 1) * static_cast<double>(j);
      if (est <= target) {
        found = true;
        break;
      }
    }
    if (found) break;
  }

  mpfr_t acc, t, base;
  mpfr_init2(acc, work);
  mpfr_init2(t, work);
  mpfr_init2(base, work);

  // direct sum to n = 2^j
  const unsigned long n = 1ul << j;
  mpfr_set_ui(acc, 1, MPFR_RNDN);
  for (unsigned long i = 2; i <= n; ++i) {
    mpfr_set_ui(base, i, MPFR_RNDN);
    mpfr_pow_ui(base, base, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_ui_div(t, 1, base, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }

  // n^{1-k}/(k-1)
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_div_2ui(t, t, j * static_cast<unsigned long>(k - 1), MPFR_RNDN);
  mpfr_div_ui(t, t, static_cast<unsigned long>(k - 1), MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);

  // - n^{-k}/2
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_div_2ui(t, t, j * static_cast<unsigned long>(k) + 1, MPFR_RNDN);
  mpfr_sub(acc, acc, t, MPFR_RNDN);

  // Euler-Maclaurin correction terms
  mpq_t b, coef;
  mpz_t fact, rising;
  mpq_init(b);
  mpq_init(coef);
  mpz_init(fact);
  mpz_init(rising);
  for (unsigned long i = 1; i <= m; ++i) {
    bernoulli_cache().get(2 * i, b);
    mpz_fac_ui(fact, 2 * i);
    mpq_set_z(coef, fact);
    mpq_div(coef, b, coef);
    mpz_set_ui(rising, 1);
    for (unsigned long r = 0; r + 1 < 2 * i; ++r)
      mpz_mul_ui(rising, rising, static_cast<unsigned long>(k) + r);
    mpq_set_z(b, rising);  // reuse b as rising-factorial rational
    mpq_mul(coef, coef, b);
    mpfr_set_q(t, coef, MPFR_RNDN);
    mpfr_div_2ui(t, t, j * (static_cast<unsigned long>(k) + 2 * i - 1), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  mpq_clear(b);
  mpq_clear(coef);
  mpz_clear(fact);
  mpz_clear(rising);

  PrecReal result(precision_bits);
  mpfr_set(result.raw(), acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(t);
  mpfr_clear(base);
  return result;
}

PrecReal pi_const(long precision_bits) {
  if (precision_bits < PrecReal::kMinPrecision)
    throw usage_error("precision_bits must be at least 64");
  const long work = precision_bits + 64;

  mpfr_t a, b, t4, an, c, tmp;
  mpfr_init2(a, work);
  mpfr_init2(b, work);
  mpfr_init2(t4, work);
  mpfr_init2(an, work);
  mpfr_init2(c, work);
  mpfr_init2(tmp, work);

  mpfr_set_ui(a, 1, MPFR_RNDN);
  mpfr_set_ui(tmp, 2, MPFR_RNDN);
  mpfr_sqrt(tmp, tmp, MPFR_RNDN);
  mpfr_ui_div(b, 1, tmp, MPFR_RNDN);
  mpfr_set_ui(t4, 1, MPFR_RNDN);
  mpfr_div_2ui(t4, t4, 2, MPFR_RNDN);

  unsigned long pow2 = 0;
  const int iterations =
      static_cast<int>(std::ceil(std::log2(static_cast<double>(work)))) + 2;
  for (int it = 0; it < iterations; ++it) {
    mpfr_add(an, a, b, MPFR_RNDN);
    mpfr_div_2ui(an, an, 1, MPFR_RNDN);
    mpfr_sub(c, a, an, MPFR_RNDN);
    mpfr_sqr(tmp, c, MPFR_RNDN);
    mpfr_mul_2ui(tmp, tmp, pow2, MPFR_RNDN);
    mpfr_sub(t4, t4, tmp, MPFR_RNDN);
    mpfr_mul(tmp, a, b, MPFR_RNDN);
    mpfr_sqrt(b, tmp, MPFR_RNDN);
    mpfr_set(a, an, MPFR_RNDN);
    ++pow2;
  }

  mpfr_add(tmp, a, b, MPFR_RNDN);
  mpfr_sqr(tmp, tmp, MPFR_RNDN);
  mpfr_div(tmp, tmp, t4, MPFR_RNDN);
  mpfr_div_2ui(tmp, tmp, 2, MPFR_RNDN);

  PrecReal result(precision_bits);
  mpfr_set(result.raw(), tmp, MPFR_RNDN);
  mpfr_clear(a);
  mpfr_clear(b);
  mpfr_clear(t4);
  mpfr_clear(an);
  mpfr_clear(c);
  mpfr_clear(tmp);
  return result;
}

PrecReal exp_minus_gamma(long precision_bits) {
  PrecReal g = euler_gamma(precision_bits + 16);
  return exp(-g).with_precision(precision_bits);
}

}  // namespace cyclic
