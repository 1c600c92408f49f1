#include "cyclic/asymptotics.hpp"

#include "cyclic/constants.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/quadrature.hpp"

namespace cyclic {

namespace {

// Primes in (y, z] with the window compared exactly at the scale's precision.
template <typename Fn>
void for_window_primes(const ScalePoint& s, const PrimeList& primes, Fn&& fn) {
  if (mpfr_cmp_ui(s.z.raw(), primes.bound) > 0)
    throw usage_error("prime list too short for window");
  for (std::uint64_t p : primes.primes) {
    if (mpfr_cmp_ui(s.y.raw(), p) >= 0) continue;  // p <= y
    if (mpfr_cmp_ui(s.z.raw(), p) < 0) break;      // p > z
    fn(p);
  }
}

}  // namespace

PrecReal sigma0(const ScalePoint& s, const PrimeList& primes) {
  long work = s.L.precision() + 32;
  PrecReal sum(work);
  mpfr_t term;
  mpfr_init2(term, work);
  for_window_primes(s, primes, [&](std::uint64_t p) {
    mpfr_set_ui(term, static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
  });
  mpfr_clear(term);
  return sum.with_precision(s.L.precision());
}

PrecReal sigma1(const ScalePoint& s, const PrimeList& primes) {
  long work = s.L.precision() + 32;
  PrecReal sum(work);
  PrecReal lambda = s.lambda.with_precision(work);
  for_window_primes(s, primes, [&](std::uint64_t p) {
    PrecReal pr = PrecReal::from_uint(p, work);
    sum += exp(-(lambda / pr)) / pr;
  });
  return sum.with_precision(s.L.precision());
}

PrecReal main_term_integral(const ScalePoint& s, const PrecReal& quad_tol,
                            IntegralRoute route) {
  if (quad_tol.sign() <= 0) throw usage_error("quadrature tolerance must be positive");
  long out_prec = s.L.precision();
  long work = out_prec + 32;
  PrecReal lambda = s.lambda.with_precision(work);
  PrecReal L = s.L.with_precision(work);
  PrecReal y = s.y.with_precision(work);
  PrecReal z = s.z.with_precision(work);

  // Endpoints keep the orientation of the t-interval [y, z]; below the
  // crossover where y > z the integral flips sign instead of vanishing.
  auto oriented = [&](const Integrand& f, const PrecReal& a, const PrecReal& b) {
    if (a == b) return PrecReal(work);
    if (a < b) return integrate(f, a, b, quad_tol.with_precision(work));
    return -integrate(f, b, a, quad_tol.with_precision(work));
  };

  PrecReal integral(work);
  if (route == IntegralRoute::u_substituted) {
    // u = lambda / t maps [y, z] to [lambda/z, lambda/y] = [lambda/z, 2L].
    auto f = [&](const PrecReal& u) {
      return exp(-u) / (u * (L - log(u)));
    };
    integral = oriented(f, lambda / z, lambda / y);
  } else {
    auto f = [&](const PrecReal& t) {
      return exp(-(lambda / t)) / (t * log(t));
    };
    integral = oriented(f, y, z);
  }

  PrecReal value = exp_minus_gamma(work) * exp(integral) / log(z);
  return value.with_precision(out_prec);
}

PrecReal eval_expansion(const ScalePoint& s, const CoefficientTable& table, long N) {
  if (N < 0 || N > table.N) throw usage_error("expansion order exceeds table degree");
  long prec = table.precision_bits;
  PrecReal L = s.L.with_precision(prec);
  PrecReal base = exp_minus_gamma(prec) / L;
  if (N == 0) return base;
  PrecReal one = PrecReal::from_uint(1, prec);
  PrecReal v = one / L;
  PrecReal acc = table.c_at(N);
  for (long k = N - 1; k >= 1; --k) acc = table.c_at(k) + acc * v;
  return base * (one + acc * v);
}

MainTermReport compare_main_terms(const ScalePoint& s, const CoefficientTable& table,
                                  long N, const PrecReal& quad_tol) {
  MainTermReport rep;
  rep.scale = s;
  rep.N = N;
  rep.series_value = eval_expansion(s, table, N);
  rep.integral_value = main_term_integral(s, quad_tol);
  rep.relative_gap = abs(rep.series_value - rep.integral_value) / rep.integral_value;
  return rep;
}

MainTermReport compare_main_terms(const ScalePoint& s, const CoefficientTable& table,
                                  long N) {
  return compare_main_terms(s, table, N, PrecReal::two_pow(-80, s.L.precision()));
}

}  // namespace cyclic
