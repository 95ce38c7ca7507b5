#pragma once

#include <string>

#include "riesz/algebra.hpp"

namespace riesz {

/// Decimal fixed-point number with a certified error radius:
///   value = mantissa * 10^{-scale},  |true - value| <= error * 10^{-scale}.
/// Every operation rounds to the scale of its operands (the larger one) and
/// widens the radius so the enclosure stays valid.
class HighPrecisionReal {
public:
  HighPrecisionReal() = default;

  /// Nearest fixed-point value to x at `scale` fractional digits; error <= 1.
  static HighPrecisionReal from_rational(const Rational &x, long scale);
  /// Raw construction; error is in units of 10^{-scale}.
  static HighPrecisionReal from_parts(Integer mantissa, long scale,
                                      Integer error);

  const Integer &mantissa() const { return mantissa_; }
  long scale() const { return scale_; }
  long decimal_exponent() const { return -scale_; }
  const Integer &error_ulps() const { return error_; }

  Rational midpoint() const;
  Rational radius() const;
  bool contains(const Rational &x) const;
  /// Upper bound on |true value|.
  Rational magnitude_bound() const;

  /// Re-rounds to a new scale, adding the rounding error.
  HighPrecisionReal rescaled(long scale) const;
  /// Adds `extra` (a real, rational) to the radius.
  HighPrecisionReal widened(const Rational &extra) const;

  HighPrecisionReal operator-() const;
  friend HighPrecisionReal operator+(const HighPrecisionReal &a,
                                     const HighPrecisionReal &b);
  friend HighPrecisionReal operator-(const HighPrecisionReal &a,
                                     const HighPrecisionReal &b);
  friend HighPrecisionReal operator*(const HighPrecisionReal &a,
                                     const HighPrecisionReal &b);
  /// Throws DomainError when the divisor's enclosure contains zero.
  friend HighPrecisionReal operator/(const HighPrecisionReal &a,
                                     const HighPrecisionReal &b);
  friend HighPrecisionReal operator*(const HighPrecisionReal &a,
                                     const Rational &s);
  friend HighPrecisionReal operator/(const HighPrecisionReal &a,
                                     const Rational &s);

  HighPrecisionReal &operator+=(const HighPrecisionReal &b) {
    return *this = *this + b;
  }
  HighPrecisionReal &operator-=(const HighPrecisionReal &b) {
    return *this = *this - b;
  }
  HighPrecisionReal &operator*=(const HighPrecisionReal &b) {
    return *this = *this * b;
  }

  /// Integer power; negative exponents divide.
  HighPrecisionReal pow(long exponent) const;
  /// Square root; the enclosure must be strictly positive.
  HighPrecisionReal sqrt() const;

  /// Midpoint rounded to `digits` fractional digits.
  std::string to_decimal(int digits) const;

private:
  HighPrecisionReal(Integer mantissa, long scale, Integer error);

  Integer mantissa_ = 0;
  long scale_ = 0;
  Integer error_ = 0;
};

/// Rounded integer division num/den (den > 0), ties away from zero.
Integer round_div(const Integer &num, const Integer &den);
/// ceil(num/den) for num >= 0, den > 0.
Integer ceil_div(const Integer &num, const Integer &den);
Integer pow10(long e);

} // namespace riesz
