#pragma once

// Exact scalars: arbitrary-precision integers and rationals, plus finite
// rational combinations of even powers of pi.

#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riesz {

using Integer = mpz_class;

/// Always canonical (lowest terms, positive denominator). GMP keeps results of
/// arithmetic canonical; use make_rational() when building from a pair.
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);
Rational make_rational(long num, long den = 1);

Integer factorial(long n);

/// base^exponent; a negative exponent requires base != 0.
Rational ipow(const Rational &base, long exponent);
Integer ipow(const Integer &base, unsigned long exponent);

/// (-1)^n as a small integer.
constexpr int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

bool is_integer(const Rational &x);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational &x);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk or q == 0.
Rational parse_rational(std::string_view text);

/// Rounded decimal expansion with exactly `digits` fractional digits.
std::string to_decimal(const Rational &x, int digits);

/// Sum_e c_e * pi^e with rational c_e and even e >= 0. Zero coefficients are
/// never stored.
class PiValue {
public:
  PiValue() = default;
  explicit PiValue(const Rational &constant);

  /// c * pi^exponent. Throws OddPiExponent for odd or negative exponents.
  static PiValue monomial(const Rational &c, int exponent);

  const std::map<int, Rational> &terms() const { return terms_; }
  Rational coefficient(int exponent) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  /// The value as a Rational; throws PiResidue if any pi power survives.
  Rational to_rational() const;

  /// Divides by pi^exponent. Every stored exponent must be >= exponent.
  PiValue divided_by_pi_power(int exponent) const;

  PiValue &operator+=(const PiValue &other);
  PiValue &operator-=(const PiValue &other);
  PiValue &operator*=(const Rational &scale);

  friend PiValue operator+(PiValue a, const PiValue &b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue &b) { return a -= b; }
  friend PiValue operator*(const PiValue &a, const PiValue &b);
  friend PiValue operator*(PiValue a, const Rational &s) { return a *= s; }
  friend PiValue operator*(const Rational &s, PiValue a) { return a *= s; }
  friend bool operator==(const PiValue &a, const PiValue &b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  void add_term(int exponent, const Rational &c);

  std::map<int, Rational> terms_;
};

} // namespace riesz
