#ifndef CYCLIC_CENSUS_HPP
#define CYCLIC_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cyclic {

enum class CensusMethod { gcd_sieve, structural, brute };

std::string census_method_name(CensusMethod m);

struct CensusRecord {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  CensusMethod method = CensusMethod::gcd_sieve;
  std::uint64_t elapsed_ns = 0;
};

inline constexpr std::uint64_t kCensusCapacity = 100'000'000'000ull;
inline constexpr std::uint64_t kDefaultSegment = 1ull << 20;

// gcd(n, phi(n)) == 1, phi by trial division. n = 1 qualifies.
bool is_cyclic(std::uint64_t n);

// Equivalent structural test: squarefree and no prime pair p, q dividing n
// with q = 1 (mod p).
bool is_cyclic_structural(std::uint64_t n);

// Counts cyclic n <= x with a segmented totient sieve. threads = 0 picks
// CYCLIC_THREADS or hardware concurrency; segment_size = 0 picks the default.
// The result is identical for every thread count and segment size.
CensusRecord count_cyclic(std::uint64_t x, unsigned threads = 0,
                          std::uint64_t segment_size = 0);

// Reference counter for tests: per-n trial division, no sieve sharing.
CensusRecord count_cyclic_brute(std::uint64_t x);

void enumerate_cyclic(std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::uint64_t)>& fn);

std::vector<std::uint64_t> enumerate_cyclic(std::uint64_t lo, std::uint64_t hi);

}  // namespace cyclic

#endif
