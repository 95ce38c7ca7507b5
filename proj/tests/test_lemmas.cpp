#include <doctest.h>

#include "riesz/combinatorics.hpp"
#include "riesz/errors.hpp"
#include "riesz/lemmas.hpp"

using namespace riesz;

TEST_CASE("shifted Stirling numbers") {
  const Rational y = make_rational(3, 2);
  CHECK(shifted_stirling(4, 0, y) == pochhammer(y, 4));
  CHECK(shifted_stirling(5, 5, Rational(7)) == 1);
  CHECK(shifted_stirling(2, 1, make_rational(1, 2)) == 2);
  CHECK(shifted_stirling(3, 4, y) == 0);
  CHECK(shifted_stirling(3, -1, y) == 0);
}

TEST_CASE("shifted Stirling numbers from the unsigned expansion of (u)_n") {
  // (x + y)_n = sum_k |s(n,k)| (x + y)^k, so the x^l coefficient is
  // sum_k |s(n,k)| C(k,l) y^{k-l}.
  for (const Rational &y : {make_rational(-5, 3), Rational(0), make_rational(7, 2)})
    for (long n = 0; n <= 9; ++n)
      for (long l = 0; l <= n; ++l) {
        Rational alt = 0;
        for (long k = l; k <= n; ++k)
          alt += Rational(abs(stirling1_signed(n, k))) * binomial(k, l) *
                 ipow(y, k - l);
        CHECK(shifted_stirling(n, l, y) == alt);
      }
}

TEST_CASE("b coefficients") {
  CHECK(b_coeff(4, 0) == 24);
  CHECK(b_coeff(1, 1) == 1);
  CHECK(b_coeff(0, 0) == 1);
  for (long n = 0; n <= 10; ++n)
    CHECK(b_coeff(n, 0) == factorial(n));
}

TEST_CASE("b(p+q, p) with the sum stopped at q") {
  for (long p = 0; p <= 10; ++p)
    for (long q = 0; p + q <= 10; ++q) {
      Integer alt = 0;
      for (long j = 0; j <= q; ++j)
        alt += eulerian(p + q, j) * binomial_int(p + q - j, p);
      CHECK(alt == b_coeff(p + q, p));
    }
}

TEST_CASE("negative-order polylogarithms") {
  CHECK(polylog_neg(1, make_rational(1, 2)) == 2);
  CHECK(polylog_neg(2, make_rational(1, 3)) == make_rational(3, 2));
  CHECK(polylog_neg_eulerian(2, make_rational(1, 3)) == make_rational(3, 2));
  for (long n = 1; n <= 6; ++n)
    CHECK(polylog_neg(n, Rational(0)) == 0);
  CHECK_THROWS_AS(polylog_neg(3, Rational(1)), PoleAtOne);
  // raw series at z = -1/3; 400 terms leave a tail far below 1e-9
  const Rational z = make_rational(-1, 3);
  for (long n = 1; n <= 6; ++n) {
    Rational partial = 0, zk = 1;
    for (long k = 1; k <= 400; ++k) {
      zk *= z;
      partial += ipow(Rational(k), n) * zk;
    }
    CHECK(abs(polylog_neg(n, z) - partial) < make_rational(1, 1000000000));
  }
}

TEST_CASE("g coefficients and the lattice series closed form") {
  const Rational a = make_rational(2, 3), b = make_rational(-1, 4);
  CHECK(g_coeff(0, 0, a, b) == 1);
  CHECK(g_coeff(1, 1, a, b) == a);
  CHECK(g_coeff(1, 0, a, b) == b - a);
  CHECK(g_coeff(3, 3, Rational(5), Rational(-2)) == 750);
  CHECK_THROWS_AS(g_coeff(2, 3, a, b), IndexOutOfRange);
  CHECK_THROWS_AS(g_coeff(2, -1, a, b), IndexOutOfRange);

  auto k0 = poch_series_closed(0, a, b);
  CHECK(k0.constant == -1);
  CHECK(k0.pole_coefficients == std::vector<Rational>{2});
  const Rational z = make_rational(1, 2);
  CHECK(k0.evaluate(z) == (1 + z) / (1 - z));

  auto k1 = poch_series_closed(1, Rational(1), Rational(0));
  CHECK(k1.constant == 0);
  CHECK(k1.pole_coefficients == std::vector<Rational>{-2, 2});
  CHECK(k1.evaluate(z) == 4);

  auto k3 = poch_series_closed(3, a, make_rational(5, 2));
  CHECK(k3.pole_coefficients.size() == 4);
  CHECK(k3.evaluate(Rational(0)) == pochhammer(make_rational(5, 2), 3));
}

TEST_CASE("h derivatives") {
  CHECK(h_deriv_at_1(0, 7) == 7);
  CHECK(h_deriv_at_1(1, 3) == 3);
  CHECK(h_deriv_at_1(4, 3) == 0);
}

TEST_CASE("H numbers") {
  CHECK(H_coeff(2, 1, 1) == 1);
  CHECK(H_coeff(3 + 1, 3, 3) == factorial(6) / 8 * 3);
  CHECK(H_coeff(3, 2, 1) == 1);
  for (long n = 1; n <= 5; ++n)
    for (long k = 1; k <= n; ++k) {
      CHECK(H_coeff(k - 1, n, k) == 0);
      CHECK(H_coeff(n + k + 1, n, k) == 0);
      CHECK(h_coeff_polynomial(n, k).size() == static_cast<std::size_t>(n + k + 1));
    }
}

TEST_CASE("Bell values of binomial sequences") {
  CHECK(bell_binomial(1, 1, 4) == 6);
  CHECK(bell_binomial(2, 1, 4) == 8);
  CHECK(bell_binomial(2, 2, 3) == 9);
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k <= n; ++k)
      for (long N = 1; N <= 6; ++N)
        CHECK(bell_binomial_paths(n, k, N).agree());
}

TEST_CASE("derivatives of f_q at 1") {
  CHECK(f_deriv_at_1(0, 2, 3) == make_rational(1, 9));
  CHECK(f_deriv_at_1(1, 1, 3) == make_rational(-1, 3));
  CHECK(f_deriv_at_1(2, 1, 2) == make_rational(1, 4));
  CHECK(f_value(1, 2, make_rational(1, 2)) == make_rational(2, 3));
  CHECK_THROWS_AS(f_remainder_bound(2, 1, 3, Rational(1)), DomainError);
  CHECK(f_remainder_bound(2, 1, 3, make_rational(1, 2)) > 0);
}

TEST_CASE("G numbers") {
  CHECK(G_coeff(1, 0, 3) == make_rational(3, 2));
  CHECK(G_coeff(1, 1, 3) == make_rational(3, 2));
  CHECK(G_coeff(2, 2, 1) == make_rational(1, 12));
  CHECK(G_coeff(0, 0, 2) == 0);
  CHECK(G_coeff(3, 4, 2) == 0);
  CHECK(G_coeff(3, -1, 2) == 0);
}

TEST_CASE("f_q derivatives rebuilt from G numbers") {
  // f_q^{(n)}(1)/n! = sum_l (-1)^l G(n,l,q) N^{l-q}
  for (long n = 1; n <= 6; ++n)
    for (long q = 1; q <= 3; ++q)
      for (long N = 1; N <= 6; ++N) {
        Rational sum = 0;
        for (long l = 0; l <= n; ++l)
          sum += sign_pow(l) * G_coeff(n, l, q) * ipow(Rational(N), l - q);
        CHECK(sum == f_deriv_at_1(n, q, N) / Rational(factorial(n)));
      }
  Rational at = 0;
  for (long l = 0; l <= 2; ++l)
    at += sign_pow(l) * G_coeff(2, l, 1) * ipow(Rational(2), l - 1);
  CHECK(at == make_rational(1, 8));
}

TEST_CASE("compositions") {
  long count = 0;
  for_each_composition(7, 3, 7, [&](std::span<const long> p) {
    CHECK(p.size() == 3);
    CHECK(p[0] + p[1] + p[2] == 7);
    ++count;
  });
  CHECK(count == 15);  // C(6, 2)
  count = 0;
  for_each_composition(6, 3, 2, [&](std::span<const long>) { ++count; });
  CHECK(count == 1);  // only 2+2+2
  count = 0;
  for_each_composition(2, 3, 5, [&](std::span<const long>) { ++count; });
  CHECK(count == 0);
}
