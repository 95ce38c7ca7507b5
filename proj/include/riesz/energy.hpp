#pragma once

// Exact Riesz s-energy of the N-th roots of unity for even s.
//
//   L_s(N) = 2^{-s} N sum_{k=1}^{N-1} sin(pi k / N)^{-s}
//
// For s = -2m the energy is a binomial expression in N^2; for s = 2m it is a
// polynomial sum_nu beta_nu(m) N^{1+nu} whose coefficients are assembled
// three independent ways (the X-coefficient ledger, Bernoulli products, and
// the alpha * zeta expansion). The modified energy M_{2m}(N; r), where one
// copy of the roots sits at radius r < 1, has an exact rational closed form.

#include <vector>

#include "riesz/algebra.hpp"

namespace riesz {

/// beta[nu] is the coefficient of N^{1+nu}, nu = 0 .. 2m.
struct EnergyPolynomial {
  long m = 0;
  std::vector<Rational> beta;

  Rational evaluate(const Rational &N) const;
  friend bool operator==(const EnergyPolynomial &,
                         const EnergyPolynomial &) = default;
};

/// L_{-2m}(N) = C(2m, m) N^2 + 2 N^2 sum_{1<=k<=m, N|k} (-1)^k C(2m, m-k).
Rational energy_negative(long m, long N);

/// X(k, q, p; m), for 0 <= k <= m-1, 0 <= q <= k, 0 <= p <= k-q.
Rational x_primary(long k, long q, long p, long m);

/// X(k, q, p, n, l; m), for 0 <= k <= m-1, 0 <= q <= k, 0 <= p <= k-q,
/// 0 <= n <= 2m+q-k, 0 <= l.
Rational x_secondary(long k, long q, long p, long n, long l, long m);

/// The N^2 term that carries no X coefficient (the Pochhammer constant).
Rational beta_constant_term(long m);

/// Five-branch assembly of beta_nu(m). For m = 1 the nu = 1 branch takes
/// precedence over the nu = m branch.
EnergyPolynomial beta_branch_assembly(long m);

/// beta(m) from the X ledger (memoized); m = 1 returns (-1/12, 0, 1/12).
EnergyPolynomial beta_coeffs(long m);

/// beta_{2m-2n}(m) = (-1)^{m-n-1} B_{2m-2n}/(2m-2n)! * (-1)^n B_{2n}^{(2m)}(m)/(2n)!.
EnergyPolynomial beta_via_bernoulli(long m);

/// beta_{2m-2n}(m) = 2 zeta(2m-2n) alpha_n(2m) / (2 pi)^{2m} in pi arithmetic.
/// Throws PiResidue if a coefficient keeps a pi power.
EnergyPolynomial beta_via_expansion(long m);

/// L_{2m}(N) from beta_coeffs(m).
Rational energy_positive(long m, long N);

/// L_{2m}(N) = 2/(2 pi)^{2m} sum_{n=0}^{m} alpha_n(2m) zeta(2m-2n) N^{1+2m-2n},
/// evaluated in pi arithmetic and reduced to a rational.
Rational energy_via_expansion(long m, long N);

/// M_{2m}(N; r) as a sum over k of
///   prefactor_k [bracket_constant_k + sum_q poles_{k,q} (1 - r^N)^{-q-1}]
///   (1 - r^2)^{k+1-2m}
/// minus N (1 - r)^{-2m}.
struct ModifiedEnergyClosedForm {
  struct Term {
    long k = 0;
    Rational prefactor;
    Rational bracket_constant;
    std::vector<Rational> pole_coefficients;
  };

  long m = 0;
  long N = 0;
  std::vector<Term> terms;

  /// Exact value at rational 0 < r < 1 (DomainError otherwise).
  Rational evaluate(const Rational &r) const;
};

ModifiedEnergyClosedForm modified_energy_closed_form(long m, long N);
Rational modified_energy_closed(long m, long N, const Rational &r);

/// M_2(N; r) = (1 + r^N) N^2 / ((1 - r^2)(1 - r^N)) - N / (1 - r)^2.
Rational modified_energy_s2(long N, const Rational &r);

/// Coefficient of (1 - r)^{-2m} in the r -> 1 expansion of the closed form,
/// computed from g(k, k; N, 1 - m). Equals N.
Rational collapse_coefficient(long m, long N);

/// sum_{k=0}^{m-1} C(2m-2-k, m-1) 2^k (equals 2^{2m-2}).
Integer collapse_binomial_sum(long m);

struct Prop4Result {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// (-1)^{m-1} B_{2m}/(2m)! against its double sum over b(nu, p) and G(n, n, q).
Prop4Result prop4_check(long m);

} // namespace riesz
