#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclic/constants.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/prec_real.hpp"
#include "oracles.hpp"

using cyclic::PrecReal;

TEST_CASE("gamma matches the frozen reference digits") {
  PrecReal g = cyclic::euler_gamma(256);
  CHECK(oracle::close_abs(g, oracle::kGamma, -250));
}

TEST_CASE("gamma matches an independent Euler-Maclaurin evaluation") {
  // Different n, different Bernoulli source, fixed term count.
  CHECK(oracle::close_abs(cyclic::euler_gamma(256), oracle::em_gamma(256), -250));
}

TEST_CASE("gamma matches the library-native constant") {
  PrecReal g = cyclic::euler_gamma(320);
  PrecReal native(320);
  mpfr_const_euler(native.raw(), MPFR_RNDN);
  CHECK(oracle::close_abs(g, native, -314));
}

TEST_CASE("pi matches frozen digits, Machin, and the native constant") {
  PrecReal p = cyclic::pi_const(256);
  CHECK(oracle::close_abs(p, oracle::kPi, -250));
  CHECK(oracle::close_abs(p, oracle::machin_pi(256), -248));
  PrecReal native(256);
  mpfr_const_pi(native.raw(), MPFR_RNDN);
  CHECK(oracle::close_abs(p, native, -250));
}

TEST_CASE("zeta values match frozen digits") {
  CHECK(oracle::close_abs(cyclic::zeta(2, 256), oracle::kZeta2, -250));
  CHECK(oracle::close_abs(cyclic::zeta(3, 256), oracle::kZeta3, -250));
}

TEST_CASE("zeta(2) equals pi^2/6") {
  PrecReal z2 = cyclic::zeta(2, 256);
  PrecReal p = cyclic::pi_const(256);
  PrecReal diff = abs(z2 * std::uint64_t(6) - p * p);
  CHECK(diff < PrecReal::two_pow(-120, 256));
}

TEST_CASE("zeta far out on the real axis is 1 + 2^-k + ...") {
  PrecReal z = cyclic::zeta(64, 256);
  PrecReal one = PrecReal::from_uint(1, 256);
  CHECK(z > one);
  // z - 1 = 2^-64 + 3^-64 + ... < 2^-63
  CHECK(z - one < PrecReal::two_pow(-63, 256));
  CHECK(z - one > PrecReal::two_pow(-64, 256));
}

TEST_CASE("zeta rejects arguments below 2") {
  CHECK_THROWS_AS(cyclic::zeta(1, 256), cyclic::usage_error);
  CHECK_THROWS_AS(cyclic::zeta(0, 256), cyclic::usage_error);
  CHECK_THROWS_AS(cyclic::zeta(-3, 256), cyclic::usage_error);
}

TEST_CASE("exp_minus_gamma matches frozen digits") {
  CHECK(oracle::close_abs(cyclic::exp_minus_gamma(256), oracle::kExpMinusGamma, -250));
}

TEST_CASE("repeated evaluation is bit-identical") {
  CHECK(cyclic::euler_gamma(256) == cyclic::euler_gamma(256));
  CHECK(cyclic::zeta(5, 192) == cyclic::zeta(5, 192));
  CHECK(cyclic::pi_const(128) == cyclic::pi_const(128));
}

TEST_CASE("narrow and wide precisions agree after rounding") {
  PrecReal wide = cyclic::euler_gamma(256).with_precision(64);
  PrecReal narrow = cyclic::euler_gamma(64);
  // both within 2 ulps of the true value at 64 bits
  CHECK(abs(wide - narrow) <= PrecReal::two_pow(-63, 64));
}

TEST_CASE("precision is monotonically refinable") {
  // Successive doublings stay within the coarser precision's error bound.
  PrecReal prev = cyclic::zeta(3, 128);
  for (long p : {256L, 512L}) {
    PrecReal next = cyclic::zeta(3, p);
    CHECK(abs(next.with_precision(128) - prev) <= PrecReal::two_pow(-120, 128));
    prev = next.with_precision(128);
  }
}
