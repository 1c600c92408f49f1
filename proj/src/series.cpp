#include "cyclic/series.hpp"

#include <gmp.h>

#include <algorithm>
#include <string>
#include <utility>

#include "cyclic/constants.hpp"

namespace cyclic {

namespace {
constexpr long kMaxTableDegree = 64;
}

TruncatedSeries TruncatedSeries::zero(long degree, long precision_bits) {
  if (degree < 0) throw usage_error("series degree must be nonnegative");
  TruncatedSeries s;
  s.coeffs.assign(static_cast<size_t>(degree) + 1, PrecReal(precision_bits));
  return s;
}

TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.degree() != g.degree())
    throw usage_error("ps_mul: degree mismatch (" + std::to_string(f.degree()) +
                      " vs " + std::to_string(g.degree()) + ")");
  const long n = f.degree();
  TruncatedSeries h;
  h.coeffs.reserve(static_cast<size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    PrecReal acc = f.coeffs[0] * g.coeffs[static_cast<size_t>(j)];
    for (long i = 1; i <= j; ++i)
      acc += f.coeffs[static_cast<size_t>(i)] * g.coeffs[static_cast<size_t>(j - i)];
    h.coeffs.push_back(std::move(acc));
  }
  return h;
}

TruncatedSeries ps_exp(const TruncatedSeries& f) {
  if (!f.coeffs.at(0).is_zero())
    throw usage_error("ps_exp: nonzero constant term");
  const long n = f.degree();
  long prec = f.coeffs[0].precision();
  for (const auto& a : f.coeffs) prec = std::min(prec, a.precision());

  TruncatedSeries g;
  g.coeffs.reserve(static_cast<size_t>(n) + 1);
  g.coeffs.push_back(PrecReal::from_uint(1, prec));
  for (long j = 1; j <= n; ++j) {
    PrecReal acc(prec);
    for (long i = 1; i <= j; ++i) {
      PrecReal term = f.coeffs[static_cast<size_t>(i)] * static_cast<std::uint64_t>(i);
      acc += term * g.coeffs[static_cast<size_t>(j - i)];
    }
    g.coeffs.push_back(acc / static_cast<std::uint64_t>(j));
  }
  return g;
}

TruncatedSeries ps_log(const TruncatedSeries& f) {
  if (mpfr_cmp_ui(f.coeffs.at(0).raw(), 1) != 0)
    throw usage_error("ps_log: constant term must be 1");
  const long n = f.degree();
  long prec = f.coeffs[0].precision();
  for (const auto& a : f.coeffs) prec = std::min(prec, a.precision());

  TruncatedSeries h;
  h.coeffs.reserve(static_cast<size_t>(n) + 1);
  h.coeffs.push_back(PrecReal(prec));
  for (long j = 1; j <= n; ++j) {
    PrecReal acc(prec);
    for (long i = 1; i < j; ++i) {
      PrecReal term = h.coeffs[static_cast<size_t>(i)] * static_cast<std::uint64_t>(i);
      acc += term * f.coeffs[static_cast<size_t>(j - i)];
    }
    h.coeffs.push_back(f.coeffs[static_cast<size_t>(j)] -
                       acc / static_cast<std::uint64_t>(j));
  }
  return h;
}

namespace {

// log Gamma(1+z) as a truncated series at working precision.
TruncatedSeries log_gamma_series(long N, long work_bits) {
  TruncatedSeries f = TruncatedSeries::zero(N, work_bits);
  if (N >= 1) f.coeffs[1] = -euler_gamma(work_bits);
  for (long k = 2; k <= N; ++k) {
    PrecReal zk = zeta(k, work_bits) / static_cast<std::uint64_t>(k);
    f.coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? zk : -zk;
  }
  return f;
}

std::vector<PrecReal> gamma_taylor_work(long N, long work_bits) {
  TruncatedSeries g = ps_exp(log_gamma_series(N, work_bits));
  std::vector<PrecReal> C;
  C.reserve(static_cast<size_t>(N));
  for (long k = 1; k <= N; ++k) C.push_back(g.coeffs[static_cast<size_t>(k)]);
  return C;
}

}  // namespace

std::vector<PrecReal> gamma_taylor(long N, long precision_bits) {
  if (N < 1) throw usage_error("gamma_taylor requires N >= 1");
  if (N > kMaxTableDegree)
    throw capacity_error("series degree capped at " + std::to_string(kMaxTableDegree));
  const long work = precision_bits + 16 * N;
  std::vector<PrecReal> C = gamma_taylor_work(N, work);
  for (auto& v : C) v = v.with_precision(precision_bits);
  return C;
}

CoefficientTable cyclic_coeffs(long N, long precision_bits) {
  if (N < 1) throw usage_error("cyclic_coeffs requires N >= 1");
  if (N > kMaxTableDegree)
    throw capacity_error("series degree capped at " + std::to_string(kMaxTableDegree));
  const long work = precision_bits + 16 * N;

  std::vector<PrecReal> Cw = gamma_taylor_work(N, work);

  // h = sum_k (k-1)! C_k z^k, factorials applied exactly
  TruncatedSeries h = TruncatedSeries::zero(N, work);
  mpz_t fact;
  mpz_init(fact);
  for (long k = 1; k <= N; ++k) {
    mpz_fac_ui(fact, static_cast<unsigned long>(k - 1));
    PrecReal& slot = h.coeffs[static_cast<size_t>(k)];
    slot = PrecReal(work);
    mpfr_mul_z(slot.raw(), Cw[static_cast<size_t>(k - 1)].raw(), fact, MPFR_RNDN);
  }

  TruncatedSeries cs = ps_exp(h);

  CoefficientTable table;
  table.N = N;
  table.precision_bits = precision_bits;
  table.C.reserve(static_cast<size_t>(N));
  table.c.reserve(static_cast<size_t>(N));
  for (long k = 1; k <= N; ++k) {
    table.C.push_back(Cw[static_cast<size_t>(k - 1)].with_precision(precision_bits));
    table.c.push_back(cs.coeffs[static_cast<size_t>(k)].with_precision(precision_bits));
  }

  // sign alternation and the exact growth floor |c_k| >= (k-1)!/k
  for (long k = 1; k <= N; ++k) {
    const int want = (k % 2 == 0) ? 1 : -1;
    if (table.C_at(k).sign() != want || table.c_at(k).sign() != want) {
      mpz_clear(fact);
      throw invariant_error("coefficient sign alternation failed at k=" +
                            std::to_string(k));
    }
  }

  mpq_t bound;
  mpq_init(bound);
  for (long k = 2; k <= N; ++k) {
    mpz_fac_ui(fact, static_cast<unsigned long>(k - 1));
    mpq_set_z(bound, fact);
    mpz_set_ui(mpq_denref(bound), static_cast<unsigned long>(k));
    mpq_canonicalize(bound);
    PrecReal magnitude = abs(table.c_at(k));
    if (mpfr_cmp_q(magnitude.raw(), bound) < 0) {
      mpq_clear(bound);
      mpz_clear(fact);
      throw invariant_error("coefficient growth floor failed at k=" + std::to_string(k));
    }
  }
  mpq_clear(bound);
  mpz_clear(fact);
  return table;
}

}  // namespace cyclic
