#ifndef CYCLIC_CONSTANTS_HPP
#define CYCLIC_CONSTANTS_HPP

#include "cyclic/prec_real.hpp"

namespace cyclic {

// Euler-Mascheroni constant, correct to within 2^(-precision_bits+4).
// Euler-Maclaurin applied to H_n - log n at n = 2^s, with the tail cut where
// the first omitted Bernoulli term drops below the target accuracy.
PrecReal euler_gamma(long precision_bits);

// Riemann zeta at integer k >= 2, correct to within 2^(-precision_bits+4).
// Direct sum to n = 2^j plus Euler-Maclaurin tail correction; the truncation
// error is bounded by twice the first omitted term and kept below target.
PrecReal zeta(long k, long precision_bits);

// pi via the Gauss-Legendre (Brent-Salamin) AGM iteration.
PrecReal pi_const(long precision_bits);

// exp(-gamma), the density constant in the cyclic-count main term.
PrecReal exp_minus_gamma(long precision_bits);

}  // namespace cyclic

#endif
