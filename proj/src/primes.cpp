#include "cyclic/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Odd-only bitset spanning 2^23 integers per pass: 512 KiB of flags.
constexpr u64 kStreamSpan = 1ull << 23;

void small_sieve(u64 bound, std::vector<u64>& out) {
  out.clear();
  if (bound < 2) return;
  std::vector<bool> comp(bound + 1, false);
  for (u64 i = 2; i * i <= bound; ++i) {
    if (comp[i]) continue;
    for (u64 j = i * i; j <= bound; j += i) comp[j] = true;
  }
  for (u64 i = 2; i <= bound; ++i)
    if (!comp[i]) out.push_back(i);
}

}  // namespace

u64 integer_sqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

void for_each_prime(u64 bound, const std::function<void(u64)>& fn) {
  if (bound > kStreamBound)
    throw capacity_error("prime stream bound exceeds " + std::to_string(kStreamBound));
  if (bound < 2) return;
  fn(2);
  if (bound < 3) return;

  std::vector<u64> base;
  small_sieve(integer_sqrt(bound), base);

  // bits[i] represents the odd number lo + 2i within the current span.
  std::vector<std::uint8_t> bits(kStreamSpan / 16);
  for (u64 lo = 3; lo <= bound; lo += kStreamSpan) {
    u64 hi = std::min(bound + 1, lo + kStreamSpan);  // [lo, hi), lo odd
    u64 count = (hi - lo + 1) / 2;
    std::memset(bits.data(), 0, (count + 7) / 8);
    for (u64 p : base) {
      if (p == 2) continue;
      if (p * p >= hi) break;
      u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
      if ((start & 1) == 0) start += p;
      for (u64 m = start; m < hi; m += 2 * p) {
        u64 idx = (m - lo) / 2;
        bits[idx >> 3] |= std::uint8_t(1u << (idx & 7));
      }
    }
    for (u64 i = 0; i < count; ++i)
      if (!(bits[i >> 3] & (1u << (i & 7)))) fn(lo + 2 * i);
  }
}

PrimeList primes_up_to(u64 bound) {
  if (bound > kPrimeListCapacity)
    throw capacity_error("prime list bound exceeds " + std::to_string(kPrimeListCapacity));
  PrimeList out;
  out.bound = bound;
  if (bound >= 2) {
    // pi(x) < 1.26 x / ln x for x >= 17 keeps one reallocation at most.
    double est = bound >= 17 ? 1.26 * bound / std::log(double(bound)) : 8.0;
    out.primes.reserve(static_cast<std::size_t>(est) + 8);
  }
  for_each_prime(bound, [&](u64 p) { out.primes.push_back(p); });
  return out;
}

void totient_range(u64 lo, u64 hi, const PrimeList& base, u64* tot, u64* scratch,
                   u64* spf) {
  if (lo >= hi) throw usage_error("empty sieve range");
  if (lo == 0) throw usage_error("sieve range must start at 1 or later");
  u64 len = hi - lo;
  for (u64 i = 0; i < len; ++i) {
    tot[i] = lo + i;
    scratch[i] = lo + i;  // remaining cofactor after stripping marked primes
    if (spf) spf[i] = 0;
  }
  for (u64 p : base.primes) {
    if ((u128)p * p >= hi) break;
    u64 start = std::max(p, ((lo + p - 1) / p) * p);
    for (u64 m = start; m < hi; m += p) {
      u64 i = m - lo;
      tot[i] = tot[i] / p * (p - 1);
      while (scratch[i] % p == 0) scratch[i] /= p;
      if (spf && spf[i] == 0) spf[i] = p;
    }
  }
  for (u64 i = 0; i < len; ++i) {
    if (scratch[i] > 1) {
      // Leftover cofactor is a single prime > sqrt(hi).
      tot[i] = tot[i] / scratch[i] * (scratch[i] - 1);
      if (spf && spf[i] == 0) spf[i] = scratch[i];
    }
    if (lo + i == 1) {
      tot[i] = 1;
      if (spf) spf[i] = 1;
    }
  }
}

SieveSegment sieve_segment(u64 lo, u64 hi, const PrimeList& base) {
  if (lo >= hi) throw usage_error("empty sieve range");
  if (lo == 0) throw usage_error("sieve range must start at 1 or later");
  if (hi - lo > kSegmentCapacity)
    throw capacity_error("segment length exceeds " + std::to_string(kSegmentCapacity));
  if ((u128)base.bound * base.bound < hi)
    throw usage_error("base prime list too short for segment");
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  u64 len = hi - lo;
  seg.totient.resize(len);
  seg.spf.resize(len);
  std::vector<u64> scratch(len);
  totient_range(lo, hi, base, seg.totient.data(), scratch.data(), seg.spf.data());
  return seg;
}

PrecReal prime_reciprocal_sum(u64 bound, u64 modulus, u64 residue, long precision_bits) {
  if (modulus == 0) throw usage_error("modulus must be positive");
  if (std::gcd(modulus, residue % modulus) != 1 && modulus != 1)
    throw usage_error("residue class must be coprime to modulus");
  long work = precision_bits + 32;
  PrecReal sum(work);
  mpfr_t term;
  mpfr_init2(term, work);
  u64 target = residue % modulus;
  for_each_prime(bound, [&](u64 p) {
    if (p % modulus != target) return;
    mpfr_set_ui(term, static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
  });
  mpfr_clear(term);
  return sum.with_precision(precision_bits);
}

}  // namespace cyclic
