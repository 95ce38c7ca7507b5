#include "riesz/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/power_series.hpp"

namespace riesz {

CombCache &CombCache::global() {
  static CombCache cache;
  return cache;
}

Integer CombCache::stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  std::lock_guard lock(mutex_);
  if (stirling_.empty())
    stirling_.push_back({Integer(1)});
  while (static_cast<long>(stirling_.size()) <= n) {
    const auto &prev = stirling_.back();
    const long m = static_cast<long>(stirling_.size()) - 1;
    std::vector<Integer> row(static_cast<std::size_t>(m) + 2);
    for (long j = 0; j <= m + 1; ++j) {
      Integer v = 0;
      if (j >= 1)
        v += prev[j - 1];
      if (j <= m)
        v -= m * prev[j];
      row[j] = v;
    }
    stirling_.push_back(std::move(row));
  }
  return stirling_[n][k];
}

std::size_t CombCache::stirling_rows() const {
  std::lock_guard lock(mutex_);
  return stirling_.size();
}

Integer CombCache::eulerian(long n, long k) {
  if (n == 0)
    return k == 0 ? 1 : 0;
  if (n < 0 || k < 0 || k >= n)
    return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto it = eulerian_.find({n, k}); it != eulerian_.end())
      return it->second;
  }
  Integer sum = 0;
  for (long j = 0; j <= k; ++j) {
    Integer term = binomial_int(n + 1, j) *
                   ipow(Integer(k + 1 - j), static_cast<unsigned long>(n));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  std::lock_guard lock(mutex_);
  eulerian_.emplace(std::make_pair(n, k), sum);
  return sum;
}

Integer CombCache::binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto it = binomial_.find({n, k}); it != binomial_.end())
      return it->second;
  }
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  std::lock_guard lock(mutex_);
  binomial_.emplace(std::make_pair(n, k), b);
  return b;
}

Integer binomial_int(long n, long k) {
  if (n < 0)
    throw std::invalid_argument("binomial_int needs n >= 0");
  return CombCache::global().binomial(n, k);
}

Rational binomial(long n, long k) { return Rational(binomial_int(n, k)); }

Rational binomial(const Rational &x, long k) {
  if (k < 0)
    return 0;
  Rational r = falling_factorial(x, k);
  r /= Rational(factorial(k));
  return r;
}

Rational pochhammer(const Rational &x, long n) {
  if (n < 0)
    throw std::invalid_argument("pochhammer needs n >= 0");
  Rational r = 1;
  for (long i = 0; i < n; ++i) {
    r *= x + i;
    if (r == 0)
      break;
  }
  return r;
}

Rational falling_factorial(const Rational &x, long n) {
  if (n < 0)
    throw std::invalid_argument("falling_factorial needs n >= 0");
  Rational r = 1;
  for (long i = 0; i < n; ++i) {
    r *= x - i;
    if (r == 0)
      break;
  }
  return r;
}

Integer stirling1_signed(long n, long k) {
  return CombCache::global().stirling1(n, k);
}

Integer eulerian(long n, long k) { return CombCache::global().eulerian(n, k); }

Rational bell_partial(long n, long k, std::span<const Rational> xs) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("bell_partial needs n, k >= 0");
  if (n == 0 || k == 0)
    return (n == 0 && k == 0) ? 1 : 0;
  if (k > n)
    return 0;
  const long needed = n - k + 1;
  if (static_cast<long>(xs.size()) < needed)
    throw InsufficientVariables("B_{" + std::to_string(n) + "," +
                                std::to_string(k) + "} needs " +
                                std::to_string(needed) + " variables");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= needed; ++m)
    c[m] = xs[m - 1] / Rational(factorial(m));
  PowerSeries inner(std::move(c));
  PowerSeries power = series_int_pow(inner, k);
  Rational r = power[static_cast<int>(n)];
  r *= Rational(factorial(n));
  r /= Rational(factorial(k));
  return r;
}

Rational multinomial(std::span<const long> parts) {
  long total = 0;
  Integer den = 1;
  for (long p : parts) {
    if (p < 0)
      throw std::invalid_argument("multinomial parts must be >= 0");
    total += p;
    den *= factorial(p);
  }
  return make_rational(factorial(total), den);
}

} // namespace riesz
