#include "oracles.hpp"

#include <cmath>
#include <numeric>

namespace oracle {

using cyclic::PrecReal;
using u64 = std::uint64_t;

PrecReal ref(const char* decimal, long precision_bits) {
  return PrecReal::from_string(decimal, precision_bits);
}

bool close_abs(const PrecReal& v, const PrecReal& reference, long tol_log2) {
  long prec = std::max(v.precision(), reference.precision());
  PrecReal diff = abs(v.with_precision(prec) - reference.with_precision(prec));
  return diff < PrecReal::two_pow(tol_log2, prec);
}

bool close_abs(const PrecReal& v, const char* reference, long tol_log2) {
  return close_abs(v, ref(reference), tol_log2);
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 phi(u64 n) {
  u64 result = n;
  for (auto [p, e] : factorize(n)) result -= result / p;
  return result;
}

u64 naive_cyclic_count(u64 x) {
  u64 count = 0;
  for (u64 n = 1; n <= x; ++n)
    if (std::gcd(n, phi(n)) == 1) ++count;
  return count;
}

std::vector<std::uint32_t> phi_table(std::uint32_t x) {
  std::vector<std::uint32_t> lp(x + 1, 0), ph(x + 1, 0);
  std::vector<std::uint32_t> primes;
  if (x >= 1) ph[1] = 1;
  for (std::uint32_t i = 2; i <= x; ++i) {
    if (lp[i] == 0) {
      lp[i] = i;
      ph[i] = i - 1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      if (p > lp[i] || static_cast<u64>(p) * i > x) break;
      lp[p * i] = p;
      ph[p * i] = (i % p == 0) ? ph[i] * p : ph[i] * (p - 1);
    }
  }
  return ph;
}

PrecReal machin_pi(long precision_bits) {
  long work = precision_bits + 64;
  // atan(1/k) = sum_j (-1)^j / ((2j+1) k^(2j+1)), terms shrink by k^2.
  auto atan_inv = [&](unsigned long k) {
    PrecReal sum(work);
    mpfr_t term, kpow;
    mpfr_init2(term, work);
    mpfr_init2(kpow, work);
    mpfr_set_ui(kpow, k, MPFR_RNDN);  // k^(2j+1)
    for (unsigned long j = 0;; ++j) {
      mpfr_mul_ui(term, kpow, 2 * j + 1, MPFR_RNDN);
      mpfr_ui_div(term, 1, term, MPFR_RNDN);
      if (mpfr_get_exp(term) < -(work - 8) || mpfr_zero_p(term)) break;
      if (j % 2 == 0)
        mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
      else
        mpfr_sub(sum.raw(), sum.raw(), term, MPFR_RNDN);
      mpfr_mul_ui(kpow, kpow, k * k, MPFR_RNDN);
    }
    mpfr_clear(term);
    mpfr_clear(kpow);
    return sum;
  };
  PrecReal four_atan5 = atan_inv(5) * std::uint64_t(4);
  PrecReal quarter = four_atan5 - atan_inv(239);
  return (quarter * std::uint64_t(4)).with_precision(precision_bits);
}

PrecReal em_gamma(long precision_bits) {
  long work = precision_bits + 64;
  constexpr unsigned kShift = 20;  // n = 2^20
  constexpr unsigned long kN = 1ul << kShift;
  // B_2..B_14 as exact rationals; the first omitted correction is
  // |B_16|/(16 n^16) < 2^-320.
  constexpr long num[7] = {1, -1, 1, -1, 5, -691, 7};
  constexpr unsigned long den[7] = {6, 30, 42, 30, 66, 2730, 6};

  PrecReal sum(work);
  mpfr_t term;
  mpfr_init2(term, work);
  for (unsigned long i = 1; i <= kN; ++i) {
    mpfr_set_ui(term, i, MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
  }
  // - log n, exact power of two inside log
  mpfr_set_ui(term, 2, MPFR_RNDN);
  mpfr_log(term, term, MPFR_RNDN);
  mpfr_mul_ui(term, term, kShift, MPFR_RNDN);
  mpfr_sub(sum.raw(), sum.raw(), term, MPFR_RNDN);
  // - 1/(2n)
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_div_2ui(term, term, kShift + 1, MPFR_RNDN);
  mpfr_sub(sum.raw(), sum.raw(), term, MPFR_RNDN);
  // + B_2k / (2k n^2k)
  for (int k = 1; k <= 7; ++k) {
    mpfr_set_si(term, num[k - 1], MPFR_RNDN);
    mpfr_div_ui(term, term, den[k - 1] * 2 * static_cast<unsigned long>(k),
                MPFR_RNDN);
    mpfr_div_2ui(term, term, 2ul * k * kShift, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
  }
  mpfr_clear(term);
  return sum.with_precision(precision_bits);
}

long double trapezoid(const std::function<long double(long double)>& fn,
                      long double a, long double b, int panels) {
  long double h = (b - a) / panels;
  long double acc = (fn(a) + fn(b)) / 2;
  for (int i = 1; i < panels; ++i) acc += fn(a + h * i);
  return acc * h;
}

std::vector<u64> sk_classify(u64 x, unsigned kmax) {
  long double lx = std::log(static_cast<long double>(x));
  long double lambda = std::log(lx);
  long double L = std::log(lambda);
  long double y = lambda / (2 * L);
  long double z = lambda * std::exp(std::sqrt(L));

  std::vector<u64> counts(kmax + 1, 0);
  for (u64 n = 1; n <= x; ++n) {
    auto factors = factorize(n);
    bool small = false;
    for (auto [p, e] : factors)
      if (static_cast<long double>(p) <= y) small = true;
    if (small) continue;
    ++counts[0];

    unsigned k = 0;
    bool repeated_window = false;
    for (auto [p, e] : factors) {
      long double pd = static_cast<long double>(p);
      if (pd > y && pd <= z) {
        ++k;
        if (e > 1) repeated_window = true;
      }
    }
    if (k == 0 || k > kmax || repeated_window) continue;

    bool standard = false;
    for (auto [w, we] : factors) {
      long double wd = static_cast<long double>(w);
      if (!(wd > y && wd <= z)) continue;
      for (auto [q, qe] : factors) {
        // q qualifies when lambda * log q <= log x
        if (lambda * std::log(static_cast<long double>(q)) > lx) continue;
        if (q % w == 1) {
          standard = true;
          break;
        }
      }
      if (standard) break;
    }
    if (standard) ++counts[k];
  }
  return counts;
}

}  // namespace oracle
