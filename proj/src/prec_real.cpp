#include "cyclic/prec_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cyclic {

namespace {

long checked_prec(long precision_bits) {
  if (precision_bits < PrecReal::kMinPrecision)
    throw usage_error("precision_bits must be at least 64, got " +
                      std::to_string(precision_bits));
  return precision_bits;
}

}  // namespace

PrecReal::PrecReal() {
  mpfr_init2(v_, kMinPrecision);
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(long precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(const PrecReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept {
  mpfr_init2(v_, kMinPrecision);
  mpfr_swap(v_, other.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::from_int(std::int64_t v, long precision_bits) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  PrecReal r(precision_bits);
  mpfr_set_si(r.v_, static_cast<long>(v), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_uint(std::uint64_t v, long precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_ui(r.v_, static_cast<unsigned long>(v), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_double(double v, long precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_string(const std::string& s, long precision_bits) {
  PrecReal r(precision_bits);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw usage_error("not a decimal number: '" + s + "'");
  return r;
}

PrecReal PrecReal::two_pow(long exponent, long precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_ui(r.v_, 1, MPFR_RNDN);
  if (exponent >= 0)
    mpfr_mul_2ui(r.v_, r.v_, static_cast<unsigned long>(exponent), MPFR_RNDN);
  else
    mpfr_div_2ui(r.v_, r.v_, static_cast<unsigned long>(-exponent), MPFR_RNDN);
  return r;
}

long PrecReal::precision() const { return mpfr_get_prec(v_); }

PrecReal PrecReal::with_precision(long precision_bits) const {
  PrecReal r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

bool PrecReal::is_zero() const { return mpfr_zero_p(v_) != 0; }

int PrecReal::sign() const { return mpfr_sgn(v_); }

namespace {
long result_prec(const PrecReal& a, const PrecReal& b) {
  return std::min(a.precision(), b.precision());
}
}  // namespace

PrecReal PrecReal::operator-() const {
  PrecReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator+(const PrecReal& rhs) const {
  PrecReal r(result_prec(*this, rhs));
  mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator-(const PrecReal& rhs) const {
  PrecReal r(result_prec(*this, rhs));
  mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator*(const PrecReal& rhs) const {
  PrecReal r(result_prec(*this, rhs));
  mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator/(const PrecReal& rhs) const {
  PrecReal r(result_prec(*this, rhs));
  mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

PrecReal& PrecReal::operator+=(const PrecReal& rhs) {
  *this = *this + rhs;
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& rhs) {
  *this = *this - rhs;
  return *this;
}

PrecReal PrecReal::operator*(std::uint64_t rhs) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  PrecReal r(precision());
  mpfr_mul_ui(r.v_, v_, static_cast<unsigned long>(rhs), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator/(std::uint64_t rhs) const {
  PrecReal r(precision());
  mpfr_div_ui(r.v_, v_, static_cast<unsigned long>(rhs), MPFR_RNDN);
  return r;
}

int PrecReal::compare(const PrecReal& rhs) const { return mpfr_cmp(v_, rhs.v_); }

double PrecReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string PrecReal::to_decimal(int digits) const {
  if (digits <= 0) digits = default_digits(precision());
  if (digits < 2) digits = 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

int PrecReal::default_digits(long precision_bits) {
  int d = static_cast<int>(std::ceil(static_cast<double>(precision_bits) * 0.30103)) - 2;
  return d < 2 ? 2 : d;
}

PrecReal exp(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal log(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal sqrt(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal abs(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace cyclic
