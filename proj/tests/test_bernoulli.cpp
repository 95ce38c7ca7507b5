#include <doctest.h>

#include "riesz/bernoulli.hpp"
#include "riesz/combinatorics.hpp"
#include "riesz/errors.hpp"
#include "riesz/power_series.hpp"

using namespace riesz;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(2) == make_rational(1, 6));
  CHECK(bernoulli_number(4) == make_rational(-1, 30));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));
  CHECK(bernoulli_number(30) == make_rational(Integer("8615841276005"), Integer(14322)));
  for (long n = 3; n <= 31; n += 2)
    CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("Bernoulli numbers satisfy sum_{k<n} C(n+1,k) B_k = 0") {
  for (long n = 1; n <= 25; ++n) {
    Rational sum = 0;
    for (long k = 0; k <= n; ++k)
      sum += binomial(n + 1, k) * bernoulli_number(k);
    CHECK(sum == 0);
  }
}

TEST_CASE("generalized Bernoulli polynomials") {
  CHECK(gen_bernoulli_poly(2, 4, Rational(2)) == make_rational(-1, 3));
  for (long k = 0; k <= 10; ++k)
    CHECK(gen_bernoulli_poly(k, 1, Rational(0)) == bernoulli_number(k));
}

TEST_CASE("Appell shift B_k(x+y) = sum_j C(k,j) B_j(x) y^{k-j}") {
  const Rational x = make_rational(3, 2), y = make_rational(-2, 5);
  for (long sigma : {1L, 2L, 4L, 6L})
    for (long k = 0; k <= 6; ++k) {
      Rational rhs = 0;
      for (long j = 0; j <= k; ++j)
        rhs += binomial(k, j) * gen_bernoulli_poly(j, sigma, x) * ipow(y, k - j);
      CHECK(gen_bernoulli_poly(k, sigma, x + y) == rhs);
    }
}

TEST_CASE("alpha coefficients against the inverted sinc series") {
  // sin(w)/w = sum (-1)^j w^{2j}/(2j+1)!, and w = pi z turns the w^{2n}
  // coefficient into the pi^{2n} z^{2n} coefficient.
  const int order = 12;
  std::vector<Rational> sinc(order + 1, Rational(0));
  for (int j = 0; 2 * j <= order; ++j)
    sinc[2 * j] = Rational(sign_pow(j)) / Rational(factorial(2 * j + 1));
  const PowerSeries base(sinc);
  for (long s : {2L, 4L, 6L, 8L}) {
    const PowerSeries inv = series_int_pow(base, -s);
    for (long n = 0; n <= 6; ++n) {
      const PiValue alpha = alpha_coeff(n, s);
      CHECK(alpha == PiValue::monomial(inv[2 * n], 2 * n));
    }
  }
  CHECK(alpha_coeff(0, 10) == PiValue(Rational(1)));
  CHECK(alpha_coeff(1, 4) == PiValue::monomial(make_rational(2, 3), 2));
}

TEST_CASE("zeta at even arguments") {
  CHECK(zeta_even(0) == PiValue(make_rational(-1, 2)));
  CHECK(zeta_even(2) == PiValue::monomial(make_rational(1, 6), 2));
  CHECK(zeta_even(4) == PiValue::monomial(make_rational(1, 90), 4));
  CHECK(zeta_even(6) == PiValue::monomial(make_rational(1, 945), 6));
  CHECK_THROWS_AS(zeta_even(3), OddArgument);
}
