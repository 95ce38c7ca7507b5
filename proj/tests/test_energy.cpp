#include <doctest.h>

#include "riesz/combinatorics.hpp"
#include "riesz/energy.hpp"
#include "riesz/errors.hpp"
#include "riesz/numeric.hpp"

using namespace riesz;

namespace {

// N sum_k |1 - w^k|^{2m} over the N-th roots of unity w, computed in
// Z[x]/(x^N - 1): raise 2 - x - x^{N-1} to the m-th power and read off the
// constant coefficient (sum_k w^{jk} vanishes unless N | j).
Integer negative_energy_cyclotomic(long m, long N) {
  std::vector<Integer> base(N, 0), acc(N, 0);
  base[0] += 2;
  base[1 % N] -= 1;
  base[(N - 1) % N] -= 1;
  acc[0] = 1;
  for (long step = 0; step < m; ++step) {
    std::vector<Integer> next(N, 0);
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j)
        next[(i + j) % N] += acc[i] * base[j];
    acc = std::move(next);
  }
  return Integer(N) * N * acc[0];
}

} // namespace

TEST_CASE("negative exponents") {
  CHECK(energy_negative(1, 2) == 8);
  CHECK(energy_negative(2, 2) == 32);
  CHECK(energy_negative(1, 3) == 18);
  for (long m = 1; m <= 8; ++m)
    for (long N = 2; N <= 20; ++N)
      CHECK(energy_negative(m, N) == Rational(negative_energy_cyclotomic(m, N)));
}

TEST_CASE("m = 1 and m = 2 polynomials") {
  for (long N = 2; N <= 50; ++N)
    CHECK(energy_positive(1, N) == make_rational(N * N * N - N, 12));
  const std::vector<Rational> m2 = {make_rational(-11, 720), 0,
                                    make_rational(1, 72), 0,
                                    make_rational(1, 720)};
  CHECK(beta_coeffs(2).beta == m2);
  CHECK(energy_positive(1, 2) == make_rational(1, 2));
  CHECK(energy_positive(2, 3) == make_rational(2, 3));
  CHECK(energy_positive(1, 3) == 2);
}

TEST_CASE("beta tables for m = 3 and m = 4") {
  const std::vector<Rational> m3 = {make_rational(-191, 60480), 0,
                                    make_rational(1, 360), 0,
                                    make_rational(1, 2880), 0,
                                    make_rational(1, 30240)};
  CHECK(beta_coeffs(3).beta == m3);
  const auto m4 = beta_coeffs(4).beta;
  CHECK(m4[0] == make_rational(-2497, 3628800));
  CHECK(m4[8] == make_rational(1, 1209600));
}

TEST_CASE("three routes to beta agree") {
  for (long m = 1; m <= 5; ++m) {
    const auto ledger = beta_coeffs(m);
    CHECK(ledger == beta_via_bernoulli(m));
    CHECK(ledger == beta_via_expansion(m));
    CHECK(ledger.beta.size() == static_cast<std::size_t>(2 * m + 1));
    for (std::size_t nu = 1; nu < ledger.beta.size(); nu += 2)
      CHECK(ledger.beta[nu] == 0);
    CHECK(ledger.beta.back() > 0);
    CHECK(ledger.evaluate(Rational(1)) == 0);
  }
  CHECK(beta_branch_assembly(1) == beta_coeffs(1));
  CHECK(beta_branch_assembly(3) == beta_coeffs(3));
}

TEST_CASE("expansion route evaluates to the same energies") {
  for (long m = 1; m <= 3; ++m)
    for (long N = 2; N <= 10; ++N)
      CHECK(energy_via_expansion(m, N) == energy_positive(m, N));
}

TEST_CASE("positive energies against the certified direct sum") {
  const Rational tol = oracle_tolerance(40);
  for (long m = 1; m <= 3; ++m)
    for (long N = 2; N <= 9; ++N) {
      const auto direct = riesz_energy_direct(Rational(2 * m), N, 40);
      CHECK(direct.contains(energy_positive(m, N)));
      CHECK(direct.radius() <= tol);
    }
}

TEST_CASE("X coefficients reject out-of-range indices") {
  CHECK_THROWS_AS(x_primary(1, 1, 1, 2), IndexOutOfRange);
  CHECK_THROWS_AS(x_primary(2, 0, 0, 2), IndexOutOfRange);
  CHECK(x_secondary(0, 0, 0, 1, 2, 1) == 0);
}

TEST_CASE("modified energy closed form") {
  const Rational half = make_rational(1, 2);
  CHECK(modified_energy_closed(1, 2, half) == make_rational(8, 9));
  CHECK(modified_energy_closed(1, 3, half) == make_rational(24, 7));
  for (long N = 2; N <= 6; ++N)
    for (const Rational &r : {make_rational(1, 4), half, make_rational(3, 4)})
      CHECK(modified_energy_closed(1, N, r) == modified_energy_s2(N, r));
  CHECK_THROWS_AS(modified_energy_closed(2, 3, Rational(1)), DomainError);
  CHECK_THROWS_AS(modified_energy_closed(2, 3, Rational(0)), DomainError);

  const auto form = modified_energy_closed_form(3, 4);
  CHECK(form.terms.size() == 3);
  for (const auto &t : form.terms) {
    CHECK(t.pole_coefficients.size() == static_cast<std::size_t>(t.k + 1));
    CHECK(t.bracket_constant == -pochhammer(Rational(1 - 3), t.k));
  }
  for (long m = 2; m <= 3; ++m)
    for (long N = 2; N <= 4; ++N) {
      const Rational r = make_rational(2, 5);
      const auto direct = modified_energy_direct(Rational(2 * m), N, r, 40);
      CHECK(direct.contains(modified_energy_closed(m, N, r)));
    }
}

TEST_CASE("modified energy approaches the unit-circle energy") {
  // M_{2m}(N; r) -> L_{2m}(N) as r -> 1
  for (long m = 1; m <= 3; ++m)
    for (long N = 2; N <= 4; ++N) {
      const Rational limit = energy_positive(m, N);
      Rational prev_gap = -1;
      for (long e = 2; e <= 5; ++e) {
        const Rational r = 1 - make_rational(Integer(1), pow10(e));
        const Rational gap = abs(modified_energy_closed(m, N, r) - limit);
        if (prev_gap >= 0)
          CHECK(gap < prev_gap);
        prev_gap = gap;
      }
      CHECK(prev_gap < limit / 1000);
    }
}

TEST_CASE("collapse of the (1-r)^{-2m} coefficient") {
  for (long m = 1; m <= 10; ++m)
    CHECK(collapse_binomial_sum(m) == ipow(Integer(2), static_cast<unsigned long>(2 * m - 2)));
  for (long m = 1; m <= 4; ++m)
    for (long N = 2; N <= 6; ++N)
      CHECK(collapse_coefficient(m, N) == N);
}

TEST_CASE("Bernoulli identity via b and G numbers") {
  const auto m1 = prop4_check(1);
  CHECK(m1.lhs == make_rational(1, 12));
  CHECK(m1.equal);
  const auto m2 = prop4_check(2);
  CHECK(m2.lhs == make_rational(1, 720));
  CHECK(m2.rhs == m2.lhs);
  for (long m = 3; m <= 6; ++m)
    CHECK(prop4_check(m).equal);
}
