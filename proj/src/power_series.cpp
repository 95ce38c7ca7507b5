#include "riesz/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

PowerSeries::PowerSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order)
    : coeffs_(std::move(coefficients)) {
  if (order < 0)
    throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::constant(const Rational &c, int order) {
  return PowerSeries({c}, order);
}

PowerSeries PowerSeries::variable(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  if (order >= 1)
    c[1] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::exponential(int order, const Rational &scale) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term = 1;
  for (int i = 0; i <= order; ++i) {
    c[i] = term;
    term *= scale;
    term /= i + 1;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order())
    throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(coeffs_, order);
}

PowerSeries &PowerSeries::operator+=(const PowerSeries &other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries &PowerSeries::operator-=(const PowerSeries &other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries &PowerSeries::operator*=(const Rational &scale) {
  for (auto &c : coeffs_)
    c *= scale;
  return *this;
}

PowerSeries series_mul(const PowerSeries &a, const PowerSeries &b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0)
      continue;
    for (int j = 0; i + j <= order; ++j)
      c[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_reciprocal(const PowerSeries &a) {
  if (a[0] == 0)
    throw ZeroConstantTerm("reciprocal of a series with zero constant term");
  const int order = a.order();
  std::vector<Rational> inv(static_cast<std::size_t>(order) + 1);
  Rational lead = 1 / a[0];
  inv[0] = lead;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
      acc += a[k] * inv[n - k];
    inv[n] = -acc * lead;
  }
  return PowerSeries(std::move(inv));
}

PowerSeries series_int_pow(const PowerSeries &a, long e) {
  PowerSeries base = e < 0 ? series_reciprocal(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  PowerSeries result = PowerSeries::constant(1, a.order());
  while (n > 0) {
    if (n & 1UL)
      result = series_mul(result, base);
    n >>= 1;
    if (n > 0)
      base = series_mul(base, base);
  }
  return result;
}

PowerSeries series_compose(const PowerSeries &g, const PowerSeries &f) {
  if (f[0] != 0)
    throw NonzeroInnerConstant("inner series of a composition must vanish at 0");
  const int order = std::min(g.order(), f.order());
  const PowerSeries inner = f.truncated(order);
  // Horner: g_0 + f*(g_1 + f*(g_2 + ...))
  PowerSeries acc = PowerSeries::constant(g[order], order);
  for (int i = order - 1; i >= 0; --i) {
    acc = series_mul(acc, inner);
    acc += PowerSeries::constant(g[i], order);
  }
  return acc;
}

} // namespace riesz
