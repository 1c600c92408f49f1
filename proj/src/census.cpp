#include "cyclic/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "cyclic/errors.hpp"
#include "cyclic/primes.hpp"

namespace cyclic {

namespace {

using u64 = std::uint64_t;

u64 phi_trial(u64 n) {
  u64 result = n;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CYCLIC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace

std::string census_method_name(CensusMethod m) {
  switch (m) {
    case CensusMethod::gcd_sieve: return "gcd-sieve";
    case CensusMethod::structural: return "structural";
    case CensusMethod::brute: return "brute";
  }
  return "unknown";
}

bool is_cyclic(u64 n) {
  if (n == 0) return false;
  return std::gcd(n, phi_trial(n)) == 1;
}

bool is_cyclic_structural(u64 n) {
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<u64> factors;
  u64 m = n;
  for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return false;  // squarefull
    factors.push_back(p);
  }
  if (m > 1) factors.push_back(m);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[j] % factors[i] == 1) return false;
  return true;
}

CensusRecord count_cyclic(u64 x, unsigned threads, u64 segment_size) {
  if (x == 0) throw usage_error("census bound must be positive");
  if (x > kCensusCapacity)
    throw capacity_error("census bound exceeds " + std::to_string(kCensusCapacity));
  auto start = std::chrono::steady_clock::now();

  u64 seg = segment_size ? segment_size : kDefaultSegment;
  if (seg > kSegmentCapacity)
    throw capacity_error("segment length exceeds " + std::to_string(kSegmentCapacity));

  PrimeList base = primes_up_to(integer_sqrt(x));
  u64 nsegs = (x + seg - 1) / seg;
  unsigned nthreads = resolve_threads(threads);
  if (nthreads > nsegs) nthreads = static_cast<unsigned>(nsegs);
  if (nthreads == 0) nthreads = 1;

  std::vector<u64> counts(nsegs, 0);
  std::atomic<u64> next{0};
  auto worker = [&]() {
    std::vector<u64> tot(seg), scratch(seg);
    for (;;) {
      u64 idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= nsegs) return;
      u64 lo = 1 + idx * seg;
      u64 hi = std::min(x + 1, lo + seg);
      totient_range(lo, hi, base, tot.data(), scratch.data(), nullptr);
      u64 c = 0;
      for (u64 n = lo; n < hi; ++n)
        if (std::gcd(n, tot[n - lo]) == 1) ++c;
      counts[idx] = c;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  CensusRecord rec;
  rec.x = x;
  rec.method = CensusMethod::gcd_sieve;
  for (u64 c : counts) rec.count += c;  // ascending segment order
  rec.elapsed_ns = static_cast<u64>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return rec;
}

CensusRecord count_cyclic_brute(u64 x) {
  if (x == 0) throw usage_error("census bound must be positive");
  auto start = std::chrono::steady_clock::now();
  CensusRecord rec;
  rec.x = x;
  rec.method = CensusMethod::brute;
  for (u64 n = 1; n <= x; ++n)
    if (is_cyclic(n)) ++rec.count;
  rec.elapsed_ns = static_cast<u64>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return rec;
}

void enumerate_cyclic(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  if (lo == 0) lo = 1;
  if (lo > hi) throw usage_error("empty enumeration range");
  if (hi > kCensusCapacity)
    throw capacity_error("enumeration bound exceeds " + std::to_string(kCensusCapacity));
  PrimeList base = primes_up_to(integer_sqrt(hi));
  u64 seg = kDefaultSegment;
  std::vector<u64> tot(seg), scratch(seg);
  for (u64 cur = lo; cur <= hi; cur += seg) {
    u64 top = std::min(hi + 1, cur + seg);
    totient_range(cur, top, base, tot.data(), scratch.data(), nullptr);
    for (u64 n = cur; n < top; ++n)
      if (std::gcd(n, tot[n - cur]) == 1) fn(n);
  }
}

std::vector<u64> enumerate_cyclic(u64 lo, u64 hi) {
  std::vector<u64> out;
  enumerate_cyclic(lo, hi, [&](u64 n) { out.push_back(n); });
  return out;
}

}  // namespace cyclic
