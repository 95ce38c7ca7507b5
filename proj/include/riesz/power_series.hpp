#pragma once

#include <span>
#include <vector>

#include "riesz/algebra.hpp"

namespace riesz {

/// Truncated formal power series sum_{i <= order} c_i x^i over the rationals.
/// Coefficients beyond order() are unknown, so binary operations truncate to
/// the smaller of the two orders.
class PowerSeries {
public:
  /// order = coefficients.size() - 1; the vector must be non-empty.
  explicit PowerSeries(std::vector<Rational> coefficients);
  /// Pads with zeros or truncates to the given order.
  PowerSeries(std::vector<Rational> coefficients, int order);

  static PowerSeries constant(const Rational &c, int order);
  /// The formal variable x.
  static PowerSeries variable(int order);
  /// exp(scale * x).
  static PowerSeries exponential(int order, const Rational &scale = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational &operator[](int i) const { return coeffs_[i]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  PowerSeries truncated(int order) const;

  PowerSeries &operator+=(const PowerSeries &other);
  PowerSeries &operator-=(const PowerSeries &other);
  PowerSeries &operator*=(const Rational &scale);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) {
    return a += b;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) {
    return a -= b;
  }
  friend PowerSeries operator*(PowerSeries a, const Rational &s) {
    return a *= s;
  }
  friend PowerSeries operator*(const Rational &s, PowerSeries a) {
    return a *= s;
  }
  friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries series_mul(const PowerSeries &a, const PowerSeries &b);
inline PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
  return series_mul(a, b);
}

/// 1/a. Throws ZeroConstantTerm when a[0] == 0.
PowerSeries series_reciprocal(const PowerSeries &a);

/// a^e; negative e goes through series_reciprocal.
PowerSeries series_int_pow(const PowerSeries &a, long e);

/// g(f(x)) truncated to min(g.order(), f.order()). Throws NonzeroInnerConstant
/// when f[0] != 0.
PowerSeries series_compose(const PowerSeries &g, const PowerSeries &f);

} // namespace riesz
