#pragma once

#include "riesz/algebra.hpp"

namespace riesz {

/// B_n with the t/(e^t - 1) convention (B_1 = -1/2).
Rational bernoulli_number(long n);

/// Generalized Bernoulli polynomial B_k^{(sigma)}(x): k! times the t^k
/// coefficient of (t/(e^t-1))^sigma e^{xt}.
Rational gen_bernoulli_poly(long k, long sigma, const Rational &x);

/// Coefficient of z^{2n} in (sin(pi z)/(pi z))^{-s} for s = 2m, m >= 1:
///   (-1)^n B_{2n}^{(s)}(s/2) (2 pi)^{2n} / (2n)!.
PiValue alpha_coeff(long n, long s);

/// zeta(k) for even k >= 0 as a multiple of pi^k; zeta(0) = -1/2.
/// Throws OddArgument for odd or negative k.
PiValue zeta_even(long k);

} // namespace riesz
