#ifndef CYCLIC_PREC_REAL_HPP
#define CYCLIC_PREC_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

// Arbitrary-precision real backed by MPFR. Each value carries its own
// precision (at least 64 bits). Binary operations between values of
// different precision round the result to the smaller of the two, so
// precision never silently inflates. Rounding is nearest-even throughout.
class PrecReal {
public:
  static constexpr long kMinPrecision = 64;

  PrecReal();                             // zero at 64 bits
  explicit PrecReal(long precision_bits); // zero at given precision
  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  static PrecReal from_int(std::int64_t v, long precision_bits);
  static PrecReal from_uint(std::uint64_t v, long precision_bits);
  static PrecReal from_double(double v, long precision_bits);
  // Parses a decimal literal ("3.14", "-1.5e-3"). Throws usage_error on junk.
  static PrecReal from_string(const std::string& s, long precision_bits);
  // 2^exponent, exact.
  static PrecReal two_pow(long exponent, long precision_bits);

  long precision() const;
  // Rounded copy at a different precision.
  PrecReal with_precision(long precision_bits) const;

  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  PrecReal operator-() const;
  PrecReal operator+(const PrecReal& rhs) const;
  PrecReal operator-(const PrecReal& rhs) const;
  PrecReal operator*(const PrecReal& rhs) const;
  PrecReal operator/(const PrecReal& rhs) const;
  PrecReal& operator+=(const PrecReal& rhs);
  PrecReal& operator-=(const PrecReal& rhs);

  PrecReal operator*(std::uint64_t rhs) const;
  PrecReal operator/(std::uint64_t rhs) const;

  // Exact three-way compare of the stored values.
  int compare(const PrecReal& rhs) const;
  bool operator==(const PrecReal& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const PrecReal& rhs) const { return compare(rhs) != 0; }
  bool operator<(const PrecReal& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const PrecReal& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const PrecReal& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const PrecReal& rhs) const { return compare(rhs) >= 0; }

  double to_double() const;
  // Scientific-notation decimal string with the given count of significant
  // digits (default: all digits the precision can guarantee).
  std::string to_decimal(int digits = 0) const;

  // Digits guaranteed by a binary precision: ceil(bits*log10(2)) - 2.
  static int default_digits(long precision_bits);

  // Raw handles for modules that drive MPFR directly.
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

private:
  mpfr_t v_;
};

PrecReal exp(const PrecReal& x);
PrecReal log(const PrecReal& x);
PrecReal sqrt(const PrecReal& x);
PrecReal abs(const PrecReal& x);

}  // namespace cyclic

#endif
