#pragma once

// Exact combinatorial families: binomials, rising/falling factorials, signed
// Stirling numbers of the first kind, Eulerian numbers, partial Bell
// polynomials and multinomials.

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "riesz/algebra.hpp"

namespace riesz {

/// Memo tables for Stirling, Eulerian and binomial numbers. Lookups are
/// mutex-guarded and only fully computed entries are ever visible; invalid
/// index ranges are answered with 0 without touching the tables.
class CombCache {
public:
  static CombCache &global();

  Integer stirling1(long n, long k);
  Integer eulerian(long n, long k);
  Integer binomial(long n, long k);

  std::size_t stirling_rows() const;

private:
  mutable std::mutex mutex_;
  std::vector<std::vector<Integer>> stirling_;
  std::map<std::pair<long, long>, Integer> eulerian_;
  std::map<std::pair<long, long>, Integer> binomial_;
};

/// C(n, k) for integer n >= 0; 0 when k < 0 or k > n.
Integer binomial_int(long n, long k);
Rational binomial(long n, long k);
/// Generalized binomial x(x-1)...(x-k+1)/k!; 0 when k < 0.
Rational binomial(const Rational &x, long k);

/// Rising factorial (x)_n = x(x+1)...(x+n-1).
Rational pochhammer(const Rational &x, long n);
/// x(x-1)...(x-n+1).
Rational falling_factorial(const Rational &x, long n);

/// s(n, k): coefficient of x^k in x(x-1)...(x-n+1). Built with the recurrence
/// s(n+1, k) = s(n, k-1) - n s(n, k).
Integer stirling1_signed(long n, long k);

/// Eulerian number <n, k> from the alternating binomial sum. <0,0> = 1 and
/// <n,k> = 0 for k < 0 or k >= n >= 1.
Integer eulerian(long n, long k);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), evaluated through
/// its generating function: n!/k! [t^n] (sum_m x_m t^m / m!)^k.
/// Throws InsufficientVariables when xs is shorter than n-k+1.
Rational bell_partial(long n, long k, std::span<const Rational> xs);

/// (sum parts)! / prod parts!.
Rational multinomial(std::span<const long> parts);

} // namespace riesz
