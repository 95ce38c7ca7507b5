#pragma once

// Auxiliary coefficient families used by the closed forms: shifted Stirling
// numbers, the Eulerian-binomial sums b(n, l), negative-order polylogarithms,
// the Pochhammer lattice-sum closed form g(k, q; a, b), derivatives of
// h(r) = (1 - r^N)/(1 - r) and f_q = h^{-q} at r = 1, and the H / G numbers
// that expand those derivatives in powers of N.

#include <functional>
#include <span>
#include <vector>

#include "riesz/algebra.hpp"

namespace riesz {

/// s(n, l; y) = sum_{k=l}^{n} C(k, l) s(n, k) (y + n - 1)^{k-l}, so that
/// (x + y)_n = sum_l s(n, l; y) x^l. Zero outside 0 <= l <= n.
Rational shifted_stirling(long n, long l, const Rational &y);

/// b(n, l) = sum_{j=0}^{n-l} <n, j> C(n-j, l). b(n, 0) = n!.
Integer b_coeff(long n, long l);

/// Li_{-n}(z) = (n! + sum_{l=1}^{n} (-1)^l b(n,l) (1-z)^l) / (1-z)^{n+1}.
/// Throws PoleAtOne for z == 1.
Rational polylog_neg(long n, const Rational &z);

/// Eulerian form: sum_{j<n} <n, j> z^{n-j} / (1-z)^{n+1}.
Rational polylog_neg_eulerian(long n, const Rational &z);

/// g(k, q; a, b) = sum_{p=0}^{k-q} (-1)^p s(k, p+q; b) b(p+q, p) a^{p+q}.
/// Throws IndexOutOfRange unless 0 <= q <= k.
Rational g_coeff(long k, long q, const Rational &a, const Rational &b);

/// sum_{nu in Z} (|nu| a + b)_k z^{|nu|} = constant + sum_q poles[q] (1-z)^{-q-1}.
struct GSeriesClosedForm {
  Rational constant;
  std::vector<Rational> pole_coefficients;

  Rational evaluate(const Rational &z) const;
};

GSeriesClosedForm poch_series_closed(long k, const Rational &a,
                                     const Rational &b);

/// n-th derivative of h(r) = 1 + r + ... + r^{N-1} at r = 1: n! C(N, n+1).
Rational h_deriv_at_1(long n, long N);

/// H_l(n, k) for l = 0 .. n+k (memoized). Entries with l < k vanish.
const std::vector<Integer> &h_coeff_polynomial(long n, long k);
Integer H_coeff(long l, long n, long k);

/// B_{n,k}(1! C(N,2), 2! C(N,3), ...) evaluated three independent ways.
struct BellBinomialPaths {
  Rational direct;        // partial Bell polynomial of the sequence
  Rational compositions;  // n!/k! sum over compositions of prod C(N, n_i+1)
  Rational h_polynomial;  // n!/(k!(n+k)!) sum_l (-1)^{n-l+k} H_l(n,k) N^l

  bool agree() const { return direct == compositions && direct == h_polynomial; }
};

BellBinomialPaths bell_binomial_paths(long n, long k, long N);
/// The direct value; see bell_binomial_paths for the cross-checks.
Rational bell_binomial(long n, long k, long N);

/// n-th derivative of f_q(r) = h(r)^{-q} at r = 1 via Faa di Bruno.
Rational f_deriv_at_1(long n, long q, long N);

/// Taylor remainder bound for f_q at r in (0, 1) after the (r-1)^m term:
///   (1-r)^{m+1}/(m+1)! sum_{k=1}^{m+1} (q)_k f_{q+k}(r) B_{m+1,k}(...).
Rational f_remainder_bound(long m, long q, long N, const Rational &r);

/// f_q(r) = ((1 - r^N)/(1 - r))^{-q}, exact.
Rational f_value(long q, long N, const Rational &r);

/// G(n, l, q) = sum_{k=1}^{n} (-1)^{n-k} (q)_k / (k! (n+k)!) H_{l+k}(n, k).
/// Zero for l < 0, l > n and for n == 0 (empty sum).
Rational G_coeff(long n, long l, long q);

/// Calls visit(parts) for each composition of `total` into `parts` positive
/// summands with every summand <= max_part.
void for_each_composition(long total, long parts, long max_part,
                          const std::function<void(std::span<const long>)> &visit);

} // namespace riesz
