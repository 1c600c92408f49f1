#ifndef CYCLIC_SERIES_HPP
#define CYCLIC_SERIES_HPP

#include <vector>

#include "cyclic/prec_real.hpp"

namespace cyclic {

// Formal power series truncated at degree N: coeffs[j] is the z^j coefficient.
struct TruncatedSeries {
  std::vector<PrecReal> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  static TruncatedSeries zero(long degree, long precision_bits);
};

// Cauchy product truncated at the common degree. Degrees must match.
TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(f) via the coefficient recurrence g' = f'g. Requires f.coeffs[0] == 0.
TruncatedSeries ps_exp(const TruncatedSeries& f);

// log(f) via the coefficient recurrence h' = f'/f. Requires f.coeffs[0] == 1.
TruncatedSeries ps_log(const TruncatedSeries& f);

// Taylor coefficients C_1..C_N of Gamma(1+z), from exponentiating
// -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k.
std::vector<PrecReal> gamma_taylor(long N, long precision_bits);

// C_k alongside the census expansion coefficients c_k, where
// 1 + c_1 z + c_2 z^2 + ... = exp(sum_k (k-1)! C_k z^k).
struct CoefficientTable {
  long N = 0;
  long precision_bits = 0;
  std::vector<PrecReal> C;  // C[k-1] holds C_k
  std::vector<PrecReal> c;  // c[k-1] holds c_k

  const PrecReal& C_at(long k) const { return C.at(static_cast<size_t>(k - 1)); }
  const PrecReal& c_at(long k) const { return c.at(static_cast<size_t>(k - 1)); }
};

// Builds the table and verifies sign alternation of C_k, c_k and the exact
// growth floor |c_k| >= (k-1)!/k before returning. Degree capped at 64.
CoefficientTable cyclic_coeffs(long N, long precision_bits);

}  // namespace cyclic

#endif
