#include "riesz/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/power_series.hpp"

namespace riesz {
namespace {

// (e^t - 1)/t truncated at the given order.
PowerSeries exp_minus_one_over_t(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    c[i] = make_rational(Integer(1), factorial(i + 1));
  return PowerSeries(std::move(c));
}

class BernoulliTable {
public:
  Rational get(long n) {
    std::lock_guard lock(mutex_);
    if (static_cast<long>(values_.size()) <= n) {
      // grow geometrically so repeated requests do not redo the inversion
      const long order = std::max(n, 2 * static_cast<long>(values_.size()));
      PowerSeries gen =
          series_reciprocal(exp_minus_one_over_t(static_cast<int>(order)));
      std::vector<Rational> values(static_cast<std::size_t>(order) + 1);
      for (long i = 0; i <= order; ++i)
        values[i] = gen[static_cast<int>(i)] * Rational(factorial(i));
      values_ = std::move(values);
    }
    return values_[n];
  }

private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

} // namespace

Rational bernoulli_number(long n) {
  if (n < 0)
    throw std::invalid_argument("bernoulli_number needs n >= 0");
  static BernoulliTable table;
  return table.get(n);
}

Rational gen_bernoulli_poly(long k, long sigma, const Rational &x) {
  if (k < 0 || sigma < 1)
    throw std::invalid_argument("gen_bernoulli_poly needs k >= 0, sigma >= 1");
  const int order = static_cast<int>(k);
  PowerSeries gen =
      series_int_pow(exp_minus_one_over_t(order), -sigma) *
      PowerSeries::exponential(order, x);
  return gen[order] * Rational(factorial(k));
}

PiValue alpha_coeff(long n, long s) {
  if (n < 0)
    throw std::invalid_argument("alpha_coeff needs n >= 0");
  if (s < 2 || s % 2 != 0)
    throw std::invalid_argument("alpha_coeff needs a positive even s");
  Rational c = gen_bernoulli_poly(2 * n, s, Rational(s / 2));
  c *= sign_pow(n);
  c *= Rational(ipow(Integer(2), static_cast<unsigned long>(2 * n)));
  c /= Rational(factorial(2 * n));
  return PiValue::monomial(c, static_cast<int>(2 * n));
}

PiValue zeta_even(long k) {
  if (k < 0 || k % 2 != 0)
    throw OddArgument("zeta_even needs an even k >= 0, got " +
                      std::to_string(k));
  const long m = k / 2;
  // 2^{2m-1} (-1)^{m-1} B_{2m} / (2m)!
  Rational c = bernoulli_number(k) * ipow(Rational(2), k - 1);
  c *= sign_pow(m - 1);
  c /= Rational(factorial(k));
  return PiValue::monomial(c, static_cast<int>(k));
}

} // namespace riesz
