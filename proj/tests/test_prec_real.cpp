#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "cyclic/errors.hpp"
#include "cyclic/prec_real.hpp"

using cyclic::PrecReal;

TEST_CASE("construction and exact round trips") {
  PrecReal zero;
  CHECK(zero.is_zero());
  CHECK(zero.precision() == 64);
  CHECK(zero.sign() == 0);

  PrecReal v = PrecReal::from_int(-42, 128);
  CHECK(v.precision() == 128);
  CHECK(v.sign() == -1);
  CHECK(v.to_double() == -42.0);

  PrecReal u = PrecReal::from_uint(1'000'000'007ull, 96);
  CHECK(u.to_double() == 1'000'000'007.0);

  CHECK(PrecReal::from_double(0.5, 64).to_double() == 0.5);
  CHECK(PrecReal::two_pow(-3, 64).to_double() == 0.125);
  CHECK(PrecReal::two_pow(100, 64).to_double() == std::ldexp(1.0, 100));
}

TEST_CASE("string parsing") {
  CHECK(PrecReal::from_string("2.5", 64).to_double() == 2.5);
  CHECK(PrecReal::from_string("-1.5e-3", 128).to_double() == -0.0015);
  CHECK_THROWS_AS(PrecReal::from_string("junk", 64), cyclic::usage_error);
  CHECK_THROWS_AS(PrecReal::from_string("1.5x", 64), cyclic::usage_error);
  CHECK_THROWS_AS(PrecReal::from_string("", 64), cyclic::usage_error);
}

TEST_CASE("precision floor is enforced") {
  CHECK_THROWS_AS(PrecReal(32), cyclic::usage_error);
  CHECK_THROWS_AS(PrecReal::from_int(1, 63), cyclic::usage_error);
  CHECK_THROWS_AS(PrecReal::from_int(1, 0), cyclic::usage_error);
}

TEST_CASE("mixed-precision operations round to the smaller width") {
  PrecReal a = PrecReal::from_uint(1, 256) / 3;
  PrecReal b = PrecReal::from_uint(1, 128) / 7;
  CHECK((a + b).precision() == 128);
  CHECK((a - b).precision() == 128);
  CHECK((a * b).precision() == 128);
  CHECK((a / b).precision() == 128);
  CHECK((-a).precision() == 256);

  PrecReal acc = PrecReal::from_uint(0, 192);
  acc += a;
  CHECK(acc.precision() == 192);
}

TEST_CASE("comparisons are exact") {
  PrecReal third256 = PrecReal::from_uint(1, 256) / 3;
  PrecReal third64 = PrecReal::from_uint(1, 64) / 3;
  CHECK(third256 != third64);  // different roundings of 1/3
  CHECK(third256 == third256);
  CHECK(PrecReal::from_int(2, 64) < PrecReal::from_int(3, 128));
  CHECK(PrecReal::from_int(-1, 64) <= PrecReal());
  CHECK(PrecReal::from_int(5, 64) > PrecReal::from_int(4, 64));
}

TEST_CASE("integer scaling operators") {
  PrecReal v = PrecReal::from_uint(7, 128);
  CHECK((v * std::uint64_t(6)).to_double() == 42.0);
  CHECK((v / std::uint64_t(7)).to_double() == 1.0);
}

TEST_CASE("exp(log(v)) round trip stays within a few ulps") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> dist(0.001, 1000.0);
  const long prec = 128;
  // exp scales log's half-ulp error by |log v| <= log 1000, so allow 16 ulps
  PrecReal tol = PrecReal::two_pow(-124, prec);
  for (int i = 0; i < 100; ++i) {
    PrecReal v = PrecReal::from_double(dist(rng), prec);
    PrecReal back = exp(log(v));
    PrecReal rel = abs(back - v) / v;
    CHECK(rel < tol);
  }
}

TEST_CASE("sqrt and abs") {
  PrecReal nine = PrecReal::from_uint(9, 128);
  CHECK(sqrt(nine).to_double() == 3.0);
  CHECK(abs(PrecReal::from_int(-8, 64)).to_double() == 8.0);
  CHECK(abs(PrecReal::from_int(8, 64)).to_double() == 8.0);
}

TEST_CASE("decimal rendering") {
  PrecReal v = PrecReal::from_string("1.25", 128);
  std::string s = v.to_decimal(3);
  CHECK(s == "1.25e+00");
  CHECK(PrecReal::default_digits(256) == 76);
  CHECK(PrecReal::default_digits(64) == 18);
  // default digit count tracks the precision
  std::string full = v.to_decimal();
  CHECK(full.substr(0, 4) == "1.25");
}

TEST_CASE("with_precision rounds correctly") {
  PrecReal third = PrecReal::from_uint(1, 256) / 3;
  PrecReal narrowed = third.with_precision(64);
  CHECK(narrowed.precision() == 64);
  PrecReal widened = narrowed.with_precision(256);
  CHECK(widened.precision() == 256);
  // widening is exact
  CHECK(widened == narrowed);
}
