#pragma once

// Certified high-precision oracles. Public functions take a digit count d,
// work internally at d + kGuardDigits fractional digits and return values
// rounded to d fractional digits together with a rigorous error radius.

#include "riesz/algebra.hpp"
#include "riesz/hp_real.hpp"

namespace riesz {

inline constexpr long kGuardDigits = 10;

/// Tolerance used when comparing an oracle at d digits with an exact value.
Rational oracle_tolerance(long digits);

HighPrecisionReal hp_pi(long digits);
HighPrecisionReal hp_sin(const HighPrecisionReal &x, long digits);
HighPrecisionReal hp_cos(const HighPrecisionReal &x, long digits);

/// 2^{-s} N sum_{k=1}^{N-1} sin(pi k/N)^{-s}; s must be a nonzero integer.
HighPrecisionReal riesz_energy_direct(const Rational &s, long N, long digits);

/// N sum_{k=1}^{N-1} (1 - 2 r cos(2 pi k/N) + r^2)^{-s/2}, 0 <= r < 1.
HighPrecisionReal modified_energy_direct(const Rational &s, long N,
                                         const Rational &r, long digits);

/// 2F1(a, b; c; z) for |z| < 1 by partial sums with a ratio-test tail
/// majorant. Terminating series are summed exactly. Throws
/// NoConvergenceCertificate when the majorant cannot certify d digits within
/// the iteration cap, DomainError when c hits a non-positive integer first.
HighPrecisionReal hyp2f1_trunc(const Rational &a, const Rational &b,
                               const Rational &c, const Rational &z,
                               long digits);

/// Exact value of a terminating 2F1 (a or b a non-positive integer).
Rational hyp2f1_terminating(const Rational &a, const Rational &b,
                            const Rational &c, const Rational &z);

/// 2^{2m-2} Gamma(m - 1/2) / (sqrt(pi) Gamma(m)) = (2m-2)! / ((m-1)!)^2.
Rational g_n_prefactor(long m);

/// G_n(2m; r) exactly, from the degree m-1 hypergeometric polynomial.
Rational g_n_eval(long s, long n, const Rational &r);

/// G_n(2m; r) through the terminating 2F1(1-m, n+1-m; 2-2m; 1-r^2).
Rational g_n_eval_hypergeometric(long s, long n, const Rational &r);

/// G_n(s; r) = (s/2)_n / n! r^n 2F1(s/2, n + s/2; n + 1; r^2), numerically.
HighPrecisionReal g_n_series(long s, long n, const Rational &r, long digits);

/// C_n^{(lambda)}(cos phi) via the trigonometric sum.
HighPrecisionReal gegenbauer_c(long n, const Rational &lambda,
                               const HighPrecisionReal &phi, long digits);
/// C_n^{(lambda)}(1) = (2 lambda)_n / n!.
Rational gegenbauer_at_one(long n, const Rational &lambda);

struct AnCheck {
  HighPrecisionReal lhs;  // N sum_k C_n^{(s/2)}(cos 2 pi k/N)
  Rational rhs;           // divisibility-filtered Pochhammer form
  Rational rhs_split;     // even/odd split form
  bool agree = false;
};

AnCheck a_n_check(long n, long s, long N, long digits);

struct Prop1SeriesCheck {
  Rational partial_sum;    // N^2 G_0 - N (1-r)^{-s} + 2 N^2 sum_{nu<=V} G_{nu N}
  Rational tail_majorant;  // bound on the omitted 2 N^2 sum_{nu>V} G_{nu N}
  Rational closed;         // exact M_s(N; r)
  HighPrecisionReal direct;
  bool within = false;     // closed and direct both land in [partial, partial + tail]
};

/// Bound on G_n(s; r) / (Gamma(n+s/2)/Gamma(n+1-s/2) r^n) valid for n >= s/2,
/// from an upper Riemann sum of the integral representation.
Rational g_n_majorant_constant(long s, const Rational &r);

Prop1SeriesCheck prop1_series_check(long s, long N, const Rational &r, long V,
                                    long digits);

} // namespace riesz
