#ifndef CYCLIC_ASYMPTOTICS_HPP
#define CYCLIC_ASYMPTOTICS_HPP

#include "cyclic/prec_real.hpp"
#include "cyclic/primes.hpp"
#include "cyclic/scale.hpp"
#include "cyclic/series.hpp"

namespace cyclic {

// Sum of 1/p over primes p in (y, z].
PrecReal sigma0(const ScalePoint& s, const PrimeList& primes);

// Sum of exp(-lambda/p)/p over primes p in (y, z].
PrecReal sigma1(const ScalePoint& s, const PrimeList& primes);

enum class IntegralRoute {
  u_substituted,  // integrand e^{-u} / (u (L - log u)) on [lambda/z, 2L]
  direct_t,       // integrand e^{-lambda/t} / (t log t) on [y, z]
};

// Per-x-normalized main term exp(-gamma) * exp(I) / log z, where I is the
// window integral evaluated adaptively to absolute error <= quad_tol.
PrecReal main_term_integral(const ScalePoint& s, const PrecReal& quad_tol,
                            IntegralRoute route = IntegralRoute::u_substituted);

// (exp(-gamma)/L) * (1 + sum_{k=1..N} c_k / L^k), Horner in 1/L.
// N = 0 is a single division.
PrecReal eval_expansion(const ScalePoint& s, const CoefficientTable& table, long N);

struct MainTermReport {
  ScalePoint scale;
  long N = 0;
  PrecReal series_value;
  PrecReal integral_value;
  PrecReal relative_gap;  // |series - integral| / integral
};

MainTermReport compare_main_terms(const ScalePoint& s, const CoefficientTable& table,
                                  long N, const PrecReal& quad_tol);

// Same with quad_tol = 2^-80.
MainTermReport compare_main_terms(const ScalePoint& s, const CoefficientTable& table,
                                  long N);

}  // namespace cyclic

#endif
