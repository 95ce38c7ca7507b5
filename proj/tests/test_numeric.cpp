#include <doctest.h>

#include <random>

#include "riesz/errors.hpp"
#include "riesz/numeric.hpp"

using namespace riesz;

namespace {

const char *kPi100 =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164"
    "062862089986280348253421170680";  // rounded

HighPrecisionReal exact(const Rational &x, long scale) {
  return HighPrecisionReal::from_rational(x, scale);
}

} // namespace

TEST_CASE("pi") {
  const std::string pi = kPi100;
  CHECK(hp_pi(100).to_decimal(100) == pi);
  const auto p50 = hp_pi(50);
  CHECK(p50.contains(hp_pi(100).midpoint()));
  CHECK(p50.radius() <= make_rational(Integer(1), pow10(49)));
}

TEST_CASE("sine and cosine at special angles") {
  const long d = 40;
  const auto pi = hp_pi(d + 5);
  CHECK(hp_sin(pi / Rational(6), d).contains(make_rational(1, 2)));
  CHECK(hp_cos(pi / Rational(3), d).contains(make_rational(1, 2)));
  CHECK(hp_sin(pi * Rational(7), d).contains(Rational(0)));
  CHECK(hp_cos(pi * Rational(-4), d).contains(Rational(1)));
  const auto s45 = hp_sin(pi / Rational(4), d);
  CHECK((s45 * s45).contains(make_rational(1, 2)));
}

TEST_CASE("sin^2 + cos^2 = 1 at random arguments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-4000, 4000);
  for (int i = 0; i < 50; ++i) {
    const auto x = exact(make_rational(num(rng), 97), 45);
    const auto s = hp_sin(x, 40), c = hp_cos(x, 40);
    const auto one = s * s + c * c;
    CHECK(one.contains(Rational(1)));
    CHECK(one.radius() < make_rational(Integer(1), pow10(35)));
  }
}

TEST_CASE("ball arithmetic encloses the exact result and refines with precision") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 97);
  for (int i = 0; i < 100; ++i) {
    Rational a = make_rational(num(rng), den(rng));
    Rational b = make_rational(num(rng), den(rng));
    Rational c = make_rational(num(rng), den(rng));
    Rational e = make_rational(num(rng), den(rng));
    if (e == 0)
      e = 1;
    const Rational want = (a * b + c) / e - a * a;
    auto eval = [&](long scale) {
      auto A = exact(a, scale), B = exact(b, scale), C = exact(c, scale),
           E = exact(e, scale);
      return (A * B + C) / E - A * A;
    };
    const auto lo = eval(30), hi = eval(60);
    CHECK(lo.contains(want));
    CHECK(hi.contains(want));
    CHECK(lo.contains(hi.midpoint()));
    CHECK(hi.radius() < lo.radius());
  }
}

TEST_CASE("powers, roots and division guards") {
  const auto two = exact(Rational(2), 40);
  const auto root = two.sqrt();
  CHECK((root * root).contains(Rational(2)));
  CHECK(root.pow(-4).contains(make_rational(1, 4)));
  const auto tiny = HighPrecisionReal::from_parts(1, 40, 2);
  CHECK_THROWS_AS(two / tiny, DomainError);
}

TEST_CASE("hypergeometric 2F1") {
  CHECK(hyp2f1_terminating(Rational(-1), Rational(2), Rational(-2),
                           make_rational(3, 4)) == make_rational(7, 4));
  // 2F1(1/2, 1/2; 3/2; 1/4) = arcsin(1/2) / (1/2) = pi/3
  const Rational h = make_rational(1, 2);
  const auto f = hyp2f1_trunc(h, h, make_rational(3, 2), make_rational(1, 4), 40);
  const auto pi3 = hp_pi(50) / Rational(3);
  CHECK(f.contains(pi3.midpoint()));
  CHECK(f.radius() <= oracle_tolerance(40));
  // 2F1(a, b; b; z) = (1 - z)^{-a}: a = 3/2, z = 1/2 gives sqrt(8)
  const auto g = hyp2f1_trunc(make_rational(3, 2), Rational(5), Rational(5), h, 40);
  const auto sqrt8 = exact(Rational(8), 60).sqrt();
  CHECK(g.contains(sqrt8.midpoint()));
  // terminating input through the numeric path
  CHECK(hyp2f1_trunc(Rational(-3), Rational(2), Rational(4), h, 30)
            .contains(hyp2f1_terminating(Rational(-3), Rational(2), Rational(4), h)));
  CHECK_THROWS_AS(hyp2f1_trunc(h, h, h, Rational(1), 30), DomainError);
  CHECK_THROWS_AS(hyp2f1_trunc(h, h, Rational(-2), make_rational(1, 3), 30),
                  DomainError);
  CHECK_THROWS_AS(hyp2f1_terminating(h, h, h, h), std::invalid_argument);
}

TEST_CASE("Fourier coefficients G_n") {
  CHECK(g_n_prefactor(2) == 2);
  CHECK(g_n_prefactor(1) == 1);
  CHECK(g_n_eval(2, 3, make_rational(1, 2)) == make_rational(1, 6));
  // G_0(4; r) = (1 + r^2) / (1 - r^2)^3
  const Rational r = make_rational(1, 3);
  CHECK(g_n_eval(4, 0, r) == (1 + r * r) / ipow(1 - r * r, 3));
  for (long s : {2L, 4L, 6L, 8L})
    for (long n = 0; n <= 8; ++n) {
      CHECK(g_n_eval(s, n, r) == g_n_eval_hypergeometric(s, n, r));
      CHECK(g_n_series(s, n, r, 30).contains(g_n_eval(s, n, r)));
    }
  CHECK_THROWS_AS(g_n_eval(3, 1, r), std::invalid_argument);
}

TEST_CASE("Gegenbauer polynomials") {
  CHECK(gegenbauer_at_one(3, Rational(1)) == 4);
  // lambda = 1 gives Chebyshev U_n(cos phi) = sin((n+1) phi) / sin(phi)
  const auto phi = exact(make_rational(1, 3), 50);
  for (long n = 0; n <= 6; ++n) {
    const auto lhs = gegenbauer_c(n, Rational(1), phi, 40);
    const auto rhs = hp_sin(phi * Rational(n + 1), 45) / hp_sin(phi, 45);
    CHECK(lhs.contains(rhs.midpoint()));
  }
  // at phi = 0 the trigonometric sum gives C_n(1)
  const auto zero = exact(Rational(0), 40);
  for (long n = 0; n <= 6; ++n)
    CHECK(gegenbauer_c(n, make_rational(3, 2), zero, 30)
              .contains(gegenbauer_at_one(n, make_rational(3, 2))));
}

TEST_CASE("root-of-unity sums of Gegenbauer polynomials") {
  for (long s : {2L, 4L})
    for (long n = 0; n <= 8; ++n)
      for (long N = 2; N <= 5; ++N) {
        const AnCheck c = a_n_check(n, s, N, 30);
        CHECK(c.agree);
        CHECK(c.rhs == c.rhs_split);
      }
}

TEST_CASE("direct sums") {
  const auto l2 = riesz_energy_direct(Rational(2), 5, 40);
  CHECK(l2.contains(Rational(10)));
  const auto m2 = modified_energy_direct(Rational(2), 2, make_rational(1, 2), 40);
  CHECK(m2.contains(make_rational(8, 9)));
  // odd exponent goes through the square root
  const auto odd = modified_energy_direct(Rational(1), 2, make_rational(1, 2), 40);
  CHECK(odd.contains(make_rational(4, 3)));
  CHECK_THROWS_AS(riesz_energy_direct(make_rational(1, 2), 3, 30),
                  std::invalid_argument);
  CHECK_THROWS_AS(modified_energy_direct(Rational(2), 3, Rational(1), 30),
                  DomainError);
}

TEST_CASE("series representation with a certified tail") {
  const auto c = prop1_series_check(4, 3, make_rational(1, 2), 200, 50);
  CHECK(c.within);
  CHECK(c.tail_majorant < make_rational(Integer(1), pow10(100)));
  const auto rough = prop1_series_check(2, 2, make_rational(3, 4), 5, 40);
  CHECK(rough.within);
  CHECK(rough.closed - rough.partial_sum <= rough.tail_majorant);
  CHECK(g_n_majorant_constant(4, make_rational(1, 2)) > 0);
}
