#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include <random>

#include "cyclic/constants.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/series.hpp"
#include "oracles.hpp"

using cyclic::CoefficientTable;
using cyclic::PrecReal;
using cyclic::TruncatedSeries;

namespace {

TruncatedSeries from_doubles(std::initializer_list<double> vals, long prec) {
  TruncatedSeries s;
  for (double v : vals) s.coeffs.push_back(PrecReal::from_double(v, prec));
  return s;
}

}  // namespace

TEST_CASE("zero builds the right shape") {
  TruncatedSeries s = TruncatedSeries::zero(5, 128);
  CHECK(s.degree() == 5);
  CHECK(s.coeffs.size() == 6);
  for (const auto& c : s.coeffs) CHECK(c.is_zero());
}

TEST_CASE("ps_mul is the truncated Cauchy product") {
  TruncatedSeries one_plus_z = from_doubles({1, 1, 0}, 128);
  TruncatedSeries sq = ps_mul(one_plus_z, one_plus_z);
  CHECK(sq.coeffs[0].to_double() == 1.0);
  CHECK(sq.coeffs[1].to_double() == 2.0);
  CHECK(sq.coeffs[2].to_double() == 1.0);

  TruncatedSeries mismatch = from_doubles({1, 1}, 128);
  CHECK_THROWS_AS(ps_mul(one_plus_z, mismatch), cyclic::usage_error);
}

TEST_CASE("ps_exp of 2z gives 2^k/k!") {
  const long prec = 256;
  TruncatedSeries f = TruncatedSeries::zero(8, prec);
  f.coeffs[1] = PrecReal::from_uint(2, prec);
  TruncatedSeries g = ps_exp(f);
  mpz_t fact;
  mpz_init(fact);
  for (long k = 0; k <= 8; ++k) {
    mpz_fac_ui(fact, static_cast<unsigned long>(k));
    // exact reference 2^k / k!
    PrecReal expect = PrecReal::two_pow(k, prec);
    mpfr_div_z(expect.raw(), expect.raw(), fact, MPFR_RNDN);
    CHECK(abs(g.coeffs[k] - expect) < PrecReal::two_pow(-(prec - 10), prec));
  }
  mpz_clear(fact);
}

TEST_CASE("ps_exp requires a vanishing constant term") {
  TruncatedSeries f = from_doubles({0.5, 1}, 128);
  CHECK_THROWS_AS(ps_exp(f), cyclic::usage_error);
}

TEST_CASE("ps_log requires a unit constant term") {
  TruncatedSeries f = from_doubles({0.5, 1}, 128);
  CHECK_THROWS_AS(ps_log(f), cyclic::usage_error);
}

TEST_CASE("log inverts exp on random series") {
  const long prec = 256;
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    TruncatedSeries f = TruncatedSeries::zero(12, prec);
    for (long j = 1; j <= 12; ++j)
      f.coeffs[j] = PrecReal::from_double(dist(rng), prec);
    TruncatedSeries back = ps_log(ps_exp(f));
    for (long j = 0; j <= 12; ++j)
      CHECK(abs(back.coeffs[j] - f.coeffs[j]) <
            PrecReal::two_pow(-(prec - 16), prec));
  }
}

TEST_CASE("exp inverts log near 1") {
  const long prec = 192;
  TruncatedSeries h = from_doubles({1, 0.25, -0.5, 0.125}, prec);
  TruncatedSeries back = ps_exp(ps_log(h));
  for (long j = 0; j <= 3; ++j)
    CHECK(abs(back.coeffs[j] - h.coeffs[j]) < PrecReal::two_pow(-(prec - 16), prec));
}

TEST_CASE("Gamma Taylor coefficients match closed forms") {
  auto C = cyclic::gamma_taylor(3, 256);
  REQUIRE(C.size() == 3);
  // C_1 = -gamma
  CHECK(oracle::close_abs(-C[0], oracle::kGamma, -248));
  CHECK(oracle::close_abs(C[1], oracle::kGammaTaylor2, -248));
  CHECK(oracle::close_abs(-C[2], oracle::kGammaTaylor3Abs, -248));
}

TEST_CASE("expansion coefficients match closed forms") {
  CoefficientTable t = cyclic::cyclic_coeffs(3, 256);
  CHECK(t.N == 3);
  CHECK(t.precision_bits == 256);
  CHECK(oracle::close_abs(-t.c_at(1), oracle::kGamma, -248));
  CHECK(oracle::close_abs(t.c_at(2), oracle::kCoeff2, -248));
  CHECK(oracle::close_abs(-t.c_at(3), oracle::kCoeff3Abs, -248));
}

TEST_CASE("c_2 and c_3 equal their gamma/pi/zeta combinations") {
  // Recompose the closed forms from the constant evaluators and compare.
  const long prec = 320;
  CoefficientTable t = cyclic::cyclic_coeffs(3, prec);
  PrecReal g = cyclic::euler_gamma(prec);
  PrecReal p = cyclic::pi_const(prec);
  PrecReal z3 = cyclic::zeta(3, prec);
  PrecReal c2 = g * g + p * p / std::uint64_t(12);
  PrecReal c3 = -(g * g * g + g * p * p / std::uint64_t(4) +
                  z3 * std::uint64_t(2) / std::uint64_t(3));
  CHECK(abs(t.c_at(2) - c2) < PrecReal::two_pow(-(prec - 16), prec));
  CHECK(abs(t.c_at(3) - c3) < PrecReal::two_pow(-(prec - 16), prec));
}

TEST_CASE("signs alternate and the factorial floor holds out to degree 30") {
  CoefficientTable t = cyclic::cyclic_coeffs(30, 256);
  mpz_t fact;
  mpz_init(fact);
  for (long k = 2; k <= 30; ++k) {
    CHECK(t.c_at(k).sign() == (k % 2 == 0 ? 1 : -1));
    // |c_k| * k >= (k-1)! exactly
    PrecReal lhs = abs(t.c_at(k)) * static_cast<std::uint64_t>(k);
    mpz_fac_ui(fact, static_cast<unsigned long>(k - 1));
    CHECK(mpfr_cmp_z(lhs.raw(), fact) >= 0);
  }
  mpz_clear(fact);
}

TEST_CASE("tables at different precision agree after rounding") {
  CoefficientTable narrow = cyclic::cyclic_coeffs(8, 256);
  CoefficientTable wide = cyclic::cyclic_coeffs(8, 512);
  for (long k = 1; k <= 8; ++k) {
    PrecReal a = narrow.c_at(k);
    PrecReal b = wide.c_at(k).with_precision(256);
    CHECK(abs(a - b) <= abs(a) * PrecReal::two_pow(-245, 256));
  }
}

TEST_CASE("degree bounds are enforced") {
  CHECK_THROWS_AS(cyclic::cyclic_coeffs(0, 256), cyclic::usage_error);
  CHECK_THROWS_AS(cyclic::cyclic_coeffs(65, 256), cyclic::capacity_error);
  CHECK_THROWS_AS(cyclic::gamma_taylor(0, 256), cyclic::usage_error);
}
