#include "riesz/hp_real.hpp"

#include <algorithm>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

Integer pow10(long e) {
  if (e < 0)
    throw std::invalid_argument("pow10 needs e >= 0");
  return ipow(Integer(10), static_cast<unsigned long>(e));
}

Integer round_div(const Integer &num, const Integer &den) {
  Integer q = (2 * abs(num) + den) / (2 * den);
  return num < 0 ? Integer(-q) : q;
}

Integer ceil_div(const Integer &num, const Integer &den) {
  return (num + den - 1) / den;
}

HighPrecisionReal::HighPrecisionReal(Integer mantissa, long scale,
                                     Integer error)
    : mantissa_(std::move(mantissa)), scale_(scale), error_(std::move(error)) {
  if (scale_ < 0)
    throw std::invalid_argument("HighPrecisionReal scale must be >= 0");
  if (error_ < 0)
    throw std::invalid_argument("HighPrecisionReal error must be >= 0");
}

HighPrecisionReal HighPrecisionReal::from_parts(Integer mantissa, long scale,
                                                Integer error) {
  return HighPrecisionReal(std::move(mantissa), scale, std::move(error));
}

HighPrecisionReal HighPrecisionReal::from_rational(const Rational &x,
                                                   long scale) {
  Integer num = x.get_num() * pow10(scale);
  Integer m = round_div(num, x.get_den());
  Integer err = (m * x.get_den() == num) ? Integer(0) : Integer(1);
  return HighPrecisionReal(std::move(m), scale, std::move(err));
}

Rational HighPrecisionReal::midpoint() const {
  return make_rational(mantissa_, pow10(scale_));
}

Rational HighPrecisionReal::radius() const {
  return make_rational(error_, pow10(scale_));
}

bool HighPrecisionReal::contains(const Rational &x) const {
  Rational d = x - midpoint();
  return abs(d) <= radius();
}

Rational HighPrecisionReal::magnitude_bound() const {
  return make_rational(abs(mantissa_) + error_, pow10(scale_));
}

HighPrecisionReal HighPrecisionReal::rescaled(long scale) const {
  if (scale == scale_)
    return *this;
  if (scale > scale_) {
    Integer f = pow10(scale - scale_);
    return HighPrecisionReal(mantissa_ * f, scale, error_ * f);
  }
  Integer f = pow10(scale_ - scale);
  Integer m = round_div(mantissa_, f);
  Integer err = ceil_div(error_, f) + (m * f == mantissa_ ? 0 : 1);
  return HighPrecisionReal(std::move(m), scale, std::move(err));
}

HighPrecisionReal HighPrecisionReal::widened(const Rational &extra) const {
  Rational e = abs(extra) * Rational(pow10(scale_));
  Integer ulps = ceil_div(e.get_num(), e.get_den());
  return HighPrecisionReal(mantissa_, scale_, error_ + ulps);
}

HighPrecisionReal HighPrecisionReal::operator-() const {
  return HighPrecisionReal(-mantissa_, scale_, error_);
}

namespace {

long common_scale(const HighPrecisionReal &a, const HighPrecisionReal &b) {
  return std::max(a.scale(), b.scale());
}

} // namespace

HighPrecisionReal operator+(const HighPrecisionReal &a,
                            const HighPrecisionReal &b) {
  const long s = common_scale(a, b);
  HighPrecisionReal x = a.rescaled(s), y = b.rescaled(s);
  return HighPrecisionReal(x.mantissa_ + y.mantissa_, s, x.error_ + y.error_);
}

HighPrecisionReal operator-(const HighPrecisionReal &a,
                            const HighPrecisionReal &b) {
  return a + (-b);
}

HighPrecisionReal operator*(const HighPrecisionReal &a,
                            const HighPrecisionReal &b) {
  const long s = common_scale(a, b);
  HighPrecisionReal x = a.rescaled(s), y = b.rescaled(s);
  const Integer unit = pow10(s);
  Integer raw = x.mantissa_ * y.mantissa_;
  Integer m = round_div(raw, unit);
  // |ab - xy| <= |x| ey + |y| ex + ex ey, all in units of 10^{-2s}
  Integer spread = abs(x.mantissa_) * y.error_ + abs(y.mantissa_) * x.error_ +
                   x.error_ * y.error_;
  Integer err = ceil_div(spread, unit) + (m * unit == raw ? 0 : 1);
  return HighPrecisionReal(std::move(m), s, std::move(err));
}

HighPrecisionReal operator/(const HighPrecisionReal &a,
                            const HighPrecisionReal &b) {
  const long s = common_scale(a, b);
  HighPrecisionReal x = a.rescaled(s), y = b.rescaled(s);
  const Integer B = abs(y.mantissa_);
  if (B <= y.error_)
    throw DomainError("division by an enclosure that contains zero");
  const Integer unit = pow10(s);
  Integer raw = x.mantissa_ * unit;
  Integer m = round_div(y.mantissa_ < 0 ? Integer(-raw) : raw, B);
  // |a/b - x/y| <= (|x| ey + |y| ex) / (|y| (|y| - ey)), scaled to ulps
  Integer spread = (abs(x.mantissa_) * y.error_ + B * x.error_) * unit;
  Integer err = ceil_div(spread, B * (B - y.error_)) + 1;
  return HighPrecisionReal(std::move(m), s, std::move(err));
}

HighPrecisionReal operator*(const HighPrecisionReal &a, const Rational &s) {
  const Integer &p = s.get_num();
  const Integer &q = s.get_den();
  Integer raw = a.mantissa_ * p;
  Integer m = round_div(raw, q);
  Integer err = ceil_div(a.error_ * abs(p), q) + (m * q == raw ? 0 : 1);
  return HighPrecisionReal(std::move(m), a.scale_, std::move(err));
}

HighPrecisionReal operator/(const HighPrecisionReal &a, const Rational &s) {
  if (s == 0)
    throw DomainError("division by zero");
  return a * (1 / s);
}

HighPrecisionReal HighPrecisionReal::pow(long exponent) const {
  if (exponent < 0) {
    HighPrecisionReal one(pow10(scale_), scale_, 0);
    return one / pow(-exponent);
  }
  HighPrecisionReal result(pow10(scale_), scale_, 0);
  HighPrecisionReal base = *this;
  unsigned long n = static_cast<unsigned long>(exponent);
  while (n > 0) {
    if (n & 1UL)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

HighPrecisionReal HighPrecisionReal::sqrt() const {
  if (mantissa_ <= error_)
    throw DomainError("sqrt of an enclosure that reaches zero");
  // floor(sqrt(mantissa * 10^s)) at scale s
  Integer m;
  Integer radicand = mantissa_ * pow10(scale_);
  mpz_sqrt(m.get_mpz_t(), radicand.get_mpz_t());
  // |sqrt(a) - sqrt(x)| <= e / sqrt(x - e) in real units; in ulps:
  //   e * sqrt(10^s) / sqrt(mantissa - e) <= e * (isqrt(10^s)+1) / isqrt(mantissa - e)
  Integer root_unit, root_low;
  Integer unit = pow10(scale_);
  Integer low = mantissa_ - error_;
  mpz_sqrt(root_unit.get_mpz_t(), unit.get_mpz_t());
  mpz_sqrt(root_low.get_mpz_t(), low.get_mpz_t());
  Integer err = 1; // floor
  if (error_ > 0) {
    if (root_low == 0)
      throw DomainError("sqrt enclosure too wide");
    err += ceil_div(error_ * (root_unit + 1), root_low);
  }
  return HighPrecisionReal(std::move(m), scale_, std::move(err));
}

std::string HighPrecisionReal::to_decimal(int digits) const {
  return riesz::to_decimal(midpoint(), digits);
}

} // namespace riesz
