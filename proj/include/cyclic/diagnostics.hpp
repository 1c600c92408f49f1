#ifndef CYCLIC_DIAGNOSTICS_HPP
#define CYCLIC_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclic/prec_real.hpp"

namespace cyclic {

enum class DiagnosticKind { mertens, lemma3, sk_census };

std::string diagnostic_kind_name(DiagnosticKind k);

// One measurement: residual = observed - reference at the stated precision.
struct DiagnosticRow {
  DiagnosticKind kind = DiagnosticKind::mertens;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  PrecReal observed;
  PrecReal reference;
  PrecReal residual;
};

inline constexpr std::uint64_t kSkCensusCapacity = 10'000'000;
inline constexpr unsigned kMaxWindowPrimes = 8;

// observed = sum of 1/p over p <= X, reference = log log X.
DiagnosticRow mertens_residual(std::uint64_t X, long precision_bits = 256);

// observed = sum of 1/p over p <= X with p = 1 (mod m),
// reference = (log log X) / phi(m).
DiagnosticRow lemma3_residual(std::uint64_t m, std::uint64_t X,
                              long precision_bits = 256);

// Rows for m = 1..m_max from one shared pass over the primes. Each row is
// bit-identical to the corresponding lemma3_residual call.
std::vector<DiagnosticRow> lemma3_residuals(std::uint64_t m_max, std::uint64_t X,
                                            long precision_bits = 256);

// Primes p | n for which some prime q | n with q <= x^{1/log log x} has
// q = 1 (mod p). Ascending. Every returned p divides gcd(n, phi(n)).
std::vector<std::uint64_t> classify_standard(std::uint64_t n, std::uint64_t x,
                                             long precision_bits = 128);

// counts[0] = #{n <= x with no prime factor <= y}; counts[k] for k >= 1
// restricts to exactly k distinct window primes in (y, z], each dividing n
// only once, at least one with a witness prime as in classify_standard.
std::vector<std::uint64_t> sk_census(std::uint64_t x, unsigned kmax);

std::vector<DiagnosticRow> sk_census_rows(std::uint64_t x, unsigned kmax,
                                          long precision_bits = 128);

}  // namespace cyclic

#endif
