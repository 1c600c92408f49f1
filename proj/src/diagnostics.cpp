#include "cyclic/diagnostics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

#include "cyclic/errors.hpp"
#include "cyclic/primes.hpp"
#include "cyclic/scale.hpp"

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

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrecReal loglog(u64 X, long prec) {
  long work = prec + 32;
  return log(log(PrecReal::from_uint(X, work))).with_precision(prec);
}

// q <= x^{1/log log x}, decided as (log log x) * log q <= log x with
// 32 guard bits; ties go to "qualifies".
struct WitnessThreshold {
  PrecReal log_x;
  PrecReal lambda;

  WitnessThreshold(u64 x, long prec)
      : log_x(log(PrecReal::from_uint(x, prec + 32))), lambda(log(log_x)) {}

  bool admits(u64 q) const {
    PrecReal lhs = lambda * log(PrecReal::from_uint(q, lambda.precision()));
    return lhs <= log_x;
  }

  // Safe enumeration cap: every admissible q is <= this bound.
  u64 cap() const {
    double t = std::exp(log_x.to_double() / lambda.to_double());
    return static_cast<u64>(t) + 3;
  }
};

}  // namespace

std::string diagnostic_kind_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::mertens: return "mertens";
    case DiagnosticKind::lemma3: return "lemma3";
    case DiagnosticKind::sk_census: return "sk-census";
  }
  return "unknown";
}

DiagnosticRow mertens_residual(u64 X, long precision_bits) {
  if (X < 3) throw usage_error("residual needs X >= 3");
  DiagnosticRow row;
  row.kind = DiagnosticKind::mertens;
  row.params.emplace_back("X", std::to_string(X));
  row.observed = prime_reciprocal_sum(X, 1, 0, precision_bits);
  row.reference = loglog(X, precision_bits);
  row.residual = row.observed - row.reference;
  return row;
}

DiagnosticRow lemma3_residual(u64 m, u64 X, long precision_bits) {
  if (m < 1) throw usage_error("modulus must be positive");
  if (X < 3) throw usage_error("residual needs X >= 3");
  DiagnosticRow row;
  row.kind = DiagnosticKind::lemma3;
  row.params.emplace_back("m", std::to_string(m));
  row.params.emplace_back("X", std::to_string(X));
  row.observed = prime_reciprocal_sum(X, m, 1 % m, precision_bits);
  row.reference = loglog(X, precision_bits) / PrecReal::from_uint(phi_trial(m), precision_bits);
  row.residual = row.observed - row.reference;
  return row;
}

std::vector<DiagnosticRow> lemma3_residuals(u64 m_max, u64 X, long precision_bits) {
  if (m_max < 1) throw usage_error("modulus bound must be positive");
  if (X < 3) throw usage_error("residual needs X >= 3");
  long work = precision_bits + 32;

  // One pass; per-m accumulators see the same add sequence as the
  // individual route, so the rounded sums match it bit for bit.
  std::vector<PrecReal> sums(m_max, PrecReal(work));
  mpfr_t term;
  mpfr_init2(term, work);
  for_each_prime(X, [&](u64 p) {
    mpfr_set_ui(term, static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    for (u64 m = 1; m <= m_max; ++m)
      if (p % m == 1 % m)
        mpfr_add(sums[m - 1].raw(), sums[m - 1].raw(), term, MPFR_RNDN);
  });
  mpfr_clear(term);

  PrecReal ll = loglog(X, precision_bits);
  std::vector<DiagnosticRow> rows;
  rows.reserve(m_max);
  for (u64 m = 1; m <= m_max; ++m) {
    DiagnosticRow row;
    row.kind = DiagnosticKind::lemma3;
    row.params.emplace_back("m", std::to_string(m));
    row.params.emplace_back("X", std::to_string(X));
    row.observed = sums[m - 1].with_precision(precision_bits);
    row.reference = ll / PrecReal::from_uint(phi_trial(m), precision_bits);
    row.residual = row.observed - row.reference;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<u64> classify_standard(u64 n, u64 x, long precision_bits) {
  if (x < 16) throw usage_error("classification needs x >= 16");
  if (n < 1 || n > x) throw usage_error("classification needs 1 <= n <= x");
  WitnessThreshold th(x, precision_bits);
  std::vector<u64> factors = distinct_prime_factors(n);
  std::vector<u64> witnesses;
  for (u64 q : factors)
    if (th.admits(q)) witnesses.push_back(q);
  std::vector<u64> standard;
  for (u64 p : factors)
    for (u64 q : witnesses)
      if (q % p == 1) {
        standard.push_back(p);
        break;
      }
  return standard;
}

std::vector<u64> sk_census(u64 x, unsigned kmax) {
  if (x < 16) throw usage_error("census needs x >= 16");
  if (x > kSkCensusCapacity)
    throw capacity_error("census bound exceeds " + std::to_string(kSkCensusCapacity));

  ScalePoint s = make_scale(x, 128);
  WitnessThreshold th(x, 128);

  // Window primes, compared against y and z exactly.
  std::vector<u64> window;
  PrimeList small = primes_up_to(std::max<u64>(
      3, static_cast<u64>(std::max(s.z.to_double(), s.y.to_double())) + 2));
  for (u64 p : small.primes) {
    if (mpfr_cmp_ui(s.y.raw(), p) >= 0) continue;
    if (mpfr_cmp_ui(s.z.raw(), p) < 0) break;
    window.push_back(p);
  }
  if (window.size() > kMaxWindowPrimes)
    throw capacity_error("window holds more primes than the mask width");

  // Per-n bytes: wmask = window primes dividing n; witness = window primes
  // with a qualifying witness among n's prime factors; flags bit0 = some
  // prime factor <= y, bit1 = some window prime divides n twice.
  std::vector<std::uint8_t> wmask(x + 1, 0), witness(x + 1, 0), flags(x + 1, 0);

  for (u64 p : small.primes) {
    if (mpfr_cmp_ui(s.y.raw(), p) < 0) break;  // p > y
    for (u64 m = p; m <= x; m += p) flags[m] |= 1;
  }
  for (unsigned i = 0; i < window.size(); ++i) {
    u64 w = window[i];
    for (u64 m = w; m <= x; m += w) wmask[m] |= std::uint8_t(1u << i);
    if (w <= x / w)
      for (u64 m = w * w; m <= x; m += w * w) flags[m] |= 2;
  }
  u64 qcap = std::min(th.cap(), x);
  for_each_prime(qcap, [&](u64 q) {
    if (!th.admits(q)) return;
    std::uint8_t qb = 0;
    for (unsigned i = 0; i < window.size(); ++i)
      if (q % window[i] == 1) qb |= std::uint8_t(1u << i);
    if (!qb) return;
    for (u64 m = q; m <= x; m += q) witness[m] |= qb;
  });

  std::vector<u64> counts(kmax + 1, 0);
  for (u64 n = 1; n <= x; ++n) {
    if (flags[n] & 1) continue;  // outside S0
    ++counts[0];
    unsigned k = static_cast<unsigned>(std::popcount(wmask[n]));
    if (k == 0 || k > kmax) continue;
    if (flags[n] & 2) continue;  // repeated window prime
    if ((witness[n] & wmask[n]) == 0) continue;  // no standard window prime
    ++counts[k];
  }
  return counts;
}

std::vector<DiagnosticRow> sk_census_rows(u64 x, unsigned kmax, long precision_bits) {
  std::vector<u64> counts = sk_census(x, kmax);
  ScalePoint s = make_scale(x, 128);
  bool pre_asymptotic = mpfr_cmp_ui(s.y.raw(), 2) < 0;  // y < 2: no small primes
  std::vector<DiagnosticRow> rows;
  rows.reserve(counts.size());
  for (unsigned k = 0; k < counts.size(); ++k) {
    DiagnosticRow row;
    row.kind = DiagnosticKind::sk_census;
    row.params.emplace_back("x", std::to_string(x));
    row.params.emplace_back("k", std::to_string(k));
    row.params.emplace_back("regime", pre_asymptotic ? "pre-asymptotic" : "asymptotic");
    if (pre_asymptotic && k == 0)
      row.params.emplace_back("note", "S0-covers-all-n");
    row.observed = PrecReal::from_uint(counts[k], precision_bits);
    row.reference = PrecReal(precision_bits);
    row.residual = row.observed - row.reference;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyclic
