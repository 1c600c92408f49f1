#ifndef CYCLIC_PRIMES_HPP
#define CYCLIC_PRIMES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclic/prec_real.hpp"

namespace cyclic {

// Elements are strictly ascending and start at 2.
struct PrimeList {
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> primes;
};

// Half-open range [lo, hi) with per-element totient and smallest prime factor.
// Convention: totient(1) = 1 and spf(1) = 1.
struct SieveSegment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> totient;  // totient[n - lo] = phi(n)
  std::vector<std::uint64_t> spf;      // spf[n - lo] = least prime dividing n
};

inline constexpr std::uint64_t kSegmentCapacity = 1ull << 22;
inline constexpr std::uint64_t kPrimeListCapacity = 1ull << 28;
inline constexpr std::uint64_t kStreamBound = 1ull << 34;

std::uint64_t integer_sqrt(std::uint64_t n);

PrimeList primes_up_to(std::uint64_t bound);

// Streams primes <= bound in ascending order through an odd-only bit sieve.
void for_each_prime(std::uint64_t bound, const std::function<void(std::uint64_t)>& fn);

// Totient/spf for [lo, hi). Requires base.bound^2 >= hi.
SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const PrimeList& base);

// Fills totient values for [lo, hi) into tot (size hi-lo), and smallest prime
// factors into spf when spf is non-null. Scratch must match tot's size.
void totient_range(std::uint64_t lo, std::uint64_t hi, const PrimeList& base,
                   std::uint64_t* tot, std::uint64_t* scratch, std::uint64_t* spf);

// Sum of 1/p over primes p <= bound with p = residue (mod modulus), accumulated
// in ascending order, round-to-nearest per term, 32 guard bits internally.
PrecReal prime_reciprocal_sum(std::uint64_t bound, std::uint64_t modulus,
                              std::uint64_t residue, long precision_bits = 256);

}  // namespace cyclic

#endif
