#include "riesz/energy.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "riesz/bernoulli.hpp"
#include "riesz/combinatorics.hpp"
#include "riesz/errors.hpp"
#include "riesz/lemmas.hpp"

namespace riesz {
namespace {

void require_m(long m) {
  if (m < 1)
    throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
}

void require_N(long N) {
  if (N < 2)
    throw std::invalid_argument("N must be >= 2, got " + std::to_string(N));
}

Rational fact_ratio(long num, const Integer &den) {
  return make_rational(factorial(num), den);
}

// s(k, p+q; 1-m) b(p+q, p), shared by both X families.
Rational stirling_eulerian_factor(long k, long q, long p, long m) {
  return shifted_stirling(k, p + q, Rational(1 - m)) *
         Rational(b_coeff(p + q, p));
}

} // namespace

Rational EnergyPolynomial::evaluate(const Rational &N) const {
  Rational sum = 0;
  Rational power = N; // N^{1+nu}
  for (const auto &b : beta) {
    sum += b * power;
    power *= N;
  }
  return sum;
}

Rational energy_negative(long m, long N) {
  require_m(m);
  require_N(N);
  Rational correction = 0;
  for (long k = N; k <= m; k += N)
    correction += sign_pow(k) * binomial(2 * m, m - k);
  const Rational N2(N * N);
  return binomial(2 * m, m) * N2 + 2 * N2 * correction;
}

Rational x_primary(long k, long q, long p, long m) {
  require_m(m);
  if (k < 0 || k > m - 1 || q < 0 || q > k || p < 0 || p > k - q)
    throw IndexOutOfRange("X(k,q,p;m) index out of range");
  // 2/Gamma(m) Gamma(2(2m-1-k)+q+1) / (Gamma(m-k) k! (2m+q-k)!)
  Rational r = fact_ratio(2 * (2 * m - 1 - k) + q,
                          factorial(m - 1) * factorial(m - k - 1) *
                              factorial(k) * factorial(2 * m + q - k));
  r *= 2;
  r *= stirling_eulerian_factor(k, q, p, m);
  r *= sign_pow(p);
  r /= Rational(ipow(Integer(2), static_cast<unsigned long>(
                                     q + 1 + 2 * (2 * m - 1 - k))));
  return r;
}

Rational x_secondary(long k, long q, long p, long n, long l, long m) {
  require_m(m);
  if (k < 0 || k > m - 1 || q < 0 || q > k || p < 0 || p > k - q || n < 0 ||
      n > 2 * m + q - k || l < 0)
    throw IndexOutOfRange("X(k,q,p,n,l;m) index out of range");
  const Rational G = G_coeff(n, l, q + 1);
  if (G == 0)
    return 0;
  Rational r = fact_ratio(2 * (2 * m - 1 - k) + q - n,
                          factorial(m - 1) * factorial(m - k - 1) *
                              factorial(k) * factorial(2 * m + q - k - n));
  r *= 2;
  r *= stirling_eulerian_factor(k, q, p, m);
  r *= sign_pow(p + n + l);
  r *= ipow(Rational(2), n - (q + 1 + 2 * (2 * m - 1 - k)));
  r *= G;
  return r;
}

Rational beta_constant_term(long m) {
  require_m(m);
  Rational sum = 0;
  for (long k = 0; k <= m - 1; ++k) {
    Rational term = fact_ratio(2 * (m + k) - 1, factorial(m - k - 1) *
                                                    factorial(k) *
                                                    factorial(m + k));
    term *= pochhammer(Rational(1 - m), m - 1 - k);
    term /= Rational(ipow(Integer(2), static_cast<unsigned long>(2 * (m + k))));
    sum += term;
  }
  return -sum / Rational(factorial(m - 1));
}

EnergyPolynomial beta_branch_assembly(long m) {
  require_m(m);
  EnergyPolynomial poly;
  poly.m = m;
  poly.beta.assign(static_cast<std::size_t>(2 * m) + 1, Rational(0));

  // sum_{p=p0}^{p1} sum_{q=p}^{q1(p)} sum_{k=q}^{m-1} sum_{n=nu-p}^{2m-q}
  //   X(k, k-q, p, n, nu-p; m)
  auto secondary_block = [m](long nu, long p0, long p1, auto q_upper) {
    Rational sum = 0;
    for (long p = p0; p <= p1; ++p)
      for (long q = p; q <= q_upper(p); ++q)
        for (long k = q; k <= m - 1; ++k)
          for (long n = nu - p; n <= 2 * m - q; ++n)
            sum += x_secondary(k, k - q, p, n, nu - p, m);
    return sum;
  };
  auto to_m_minus_1 = [m](long) { return m - 1; };

  for (long nu = 0; nu <= 2 * m; ++nu) {
    Rational value = 0;
    if (nu == 1) {
      value = beta_constant_term(m);
      for (long k = 1; k <= m - 1; ++k)
        for (long q = 0; q <= k - 1; ++q)
          value += x_primary(k, q, 1, m);
      value += secondary_block(1, 0, 1, to_m_minus_1);
    } else if (nu < m) {
      for (long k = nu; k <= m - 1; ++k)
        for (long q = 0; q <= k - nu; ++q)
          value += x_primary(k, q, nu, m);
      value += secondary_block(nu, 0, nu, to_m_minus_1);
    } else if (nu == m) {
      value = secondary_block(m, 0, m - 1, to_m_minus_1);
    } else if (nu < 2 * m) {
      value = secondary_block(nu, nu - m, m - 1, to_m_minus_1);
      value += secondary_block(nu, 0, nu - m - 1,
                               [m, nu](long p) { return 2 * m - nu + p; });
    } else {
      for (long p = 0; p <= m - 1; ++p)
        for (long k = p; k <= m - 1; ++k)
          value += x_secondary(k, k - p, p, 2 * m - p, 2 * m - p, m);
    }
    poly.beta[nu] = value;
  }
  return poly;
}

EnergyPolynomial beta_coeffs(long m) {
  require_m(m);
  if (m == 1)
    return {1, {make_rational(-1, 12), Rational(0), make_rational(1, 12)}};
  static std::mutex mutex;
  static std::map<long, EnergyPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end())
      return it->second;
  }
  EnergyPolynomial poly = beta_branch_assembly(m);
  std::lock_guard lock(mutex);
  cache.emplace(m, poly);
  return poly;
}

EnergyPolynomial beta_via_bernoulli(long m) {
  require_m(m);
  EnergyPolynomial poly;
  poly.m = m;
  poly.beta.assign(static_cast<std::size_t>(2 * m) + 1, Rational(0));
  for (long n = 0; n <= m; ++n) {
    Rational left = bernoulli_number(2 * m - 2 * n) /
                    Rational(factorial(2 * m - 2 * n));
    left *= sign_pow(m - n - 1);
    Rational right = gen_bernoulli_poly(2 * n, 2 * m, Rational(m)) /
                     Rational(factorial(2 * n));
    right *= sign_pow(n);
    poly.beta[2 * m - 2 * n] = left * right;
  }
  return poly;
}

namespace {

// 2 alpha_n(2m) zeta(2m-2n) / (2 pi)^{2m}, still as a PiValue.
PiValue expansion_term(long m, long n) {
  PiValue term = alpha_coeff(n, 2 * m) * zeta_even(2 * m - 2 * n);
  term *= ipow(Rational(2), 1 - 2 * m);
  return term.divided_by_pi_power(static_cast<int>(2 * m));
}

} // namespace

EnergyPolynomial beta_via_expansion(long m) {
  require_m(m);
  EnergyPolynomial poly;
  poly.m = m;
  poly.beta.assign(static_cast<std::size_t>(2 * m) + 1, Rational(0));
  for (long n = 0; n <= m; ++n)
    poly.beta[2 * m - 2 * n] = expansion_term(m, n).to_rational();
  return poly;
}

Rational energy_positive(long m, long N) {
  require_N(N);
  return beta_coeffs(m).evaluate(Rational(N));
}

Rational energy_via_expansion(long m, long N) {
  require_m(m);
  require_N(N);
  PiValue total;
  for (long n = 0; n <= m; ++n) {
    PiValue term = alpha_coeff(n, 2 * m) * zeta_even(2 * m - 2 * n);
    total += term * ipow(Rational(N), 1 + 2 * m - 2 * n);
  }
  total *= ipow(Rational(2), 1 - 2 * m);
  return total.divided_by_pi_power(static_cast<int>(2 * m)).to_rational();
}

ModifiedEnergyClosedForm modified_energy_closed_form(long m, long N) {
  require_m(m);
  require_N(N);
  ModifiedEnergyClosedForm form;
  form.m = m;
  form.N = N;
  const Rational NN(N);
  const Rational b(1 - m);
  for (long k = 0; k <= m - 1; ++k) {
    ModifiedEnergyClosedForm::Term term;
    term.k = k;
    term.prefactor = NN * NN *
                     fact_ratio(2 * m - k - 2, factorial(m - 1) *
                                                   factorial(m - k - 1) *
                                                   factorial(k));
    term.bracket_constant = -pochhammer(b, k);
    for (long q = 0; q <= k; ++q)
      term.pole_coefficients.push_back(2 * g_coeff(k, q, NN, b));
    form.terms.push_back(std::move(term));
  }
  return form;
}

Rational ModifiedEnergyClosedForm::evaluate(const Rational &r) const {
  if (r <= 0 || r >= 1)
    throw DomainError("modified energy closed form needs 0 < r < 1");
  const Rational inv_rN = 1 / (1 - ipow(r, N));
  const Rational one_minus_r2 = 1 - r * r;
  Rational total = 0;
  for (const auto &term : terms) {
    Rational bracket = term.bracket_constant;
    Rational power = inv_rN;
    for (const auto &c : term.pole_coefficients) {
      bracket += c * power;
      power *= inv_rN;
    }
    total += term.prefactor * bracket * ipow(one_minus_r2, term.k + 1 - 2 * m);
  }
  return total - Rational(N) * ipow(1 - r, -2 * m);
}

Rational modified_energy_closed(long m, long N, const Rational &r) {
  if (r <= 0 || r >= 1)
    throw DomainError("r must lie in (0, 1)");
  return modified_energy_closed_form(m, N).evaluate(r);
}

Rational modified_energy_s2(long N, const Rational &r) {
  require_N(N);
  if (r <= 0 || r >= 1)
    throw DomainError("r must lie in (0, 1)");
  const Rational rN = ipow(r, N);
  const Rational NN(N);
  return (1 + rN) * NN * NN / ((1 - r * r) * (1 - rN)) -
         NN / ((1 - r) * (1 - r));
}

Rational collapse_coefficient(long m, long N) {
  require_m(m);
  require_N(N);
  const Rational NN(N);
  Rational sum = 0;
  for (long k = 0; k <= m - 1; ++k) {
    Rational term = fact_ratio(2 * m - k - 2, factorial(m - k - 1) *
                                                   factorial(k));
    term *= g_coeff(k, k, NN, Rational(1 - m));
    term *= ipow(NN, -1 - k);
    term *= ipow(Rational(2), k + 1 - 2 * m);
    sum += term;
  }
  return 2 * NN * NN * sum / Rational(factorial(m - 1));
}

Integer collapse_binomial_sum(long m) {
  require_m(m);
  Integer sum = 0;
  for (long k = 0; k <= m - 1; ++k)
    sum += binomial_int(2 * m - 2 - k, m - 1) *
           ipow(Integer(2), static_cast<unsigned long>(k));
  return sum;
}

Prop4Result prop4_check(long m) {
  require_m(m);
  Prop4Result result;
  result.lhs = bernoulli_number(2 * m) / Rational(factorial(2 * m));
  result.lhs *= sign_pow(m - 1);
  for (long nu = 0; nu <= m - 1; ++nu) {
    const Rational weight =
        ipow(Rational(2), 2 + nu - 2 * m) *
        fact_ratio(2 * m - 2 - nu,
                   factorial(m - 1) * factorial(nu) * factorial(m - nu - 1));
    for (long p = 0; p <= nu; ++p) {
      Rational term = weight * Rational(b_coeff(nu, p)) *
                      G_coeff(2 * m - p, 2 * m - p, nu - p + 1);
      result.rhs += sign_pow(p) * term;
    }
  }
  result.equal = result.lhs == result.rhs;
  return result;
}

} // namespace riesz
