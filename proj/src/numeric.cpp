#include "riesz/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "riesz/combinatorics.hpp"
#include "riesz/energy.hpp"
#include "riesz/errors.hpp"

namespace riesz {
namespace {

using HPR = HighPrecisionReal;

HPR one_at(long scale) { return HPR::from_parts(pow10(scale), scale, 0); }

// arctan(1/x) in ulps at the given scale; error <= 3 ulps per term.
std::pair<Integer, Integer> arctan_inverse(long x, long scale) {
  const Integer x2 = Integer(x) * x;
  Integer power = pow10(scale) / x;
  Integer sum = 0;
  long terms = 0;
  for (long k = 0; power != 0; ++k, ++terms) {
    Integer term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
  }
  // the alternating tail is below the first omitted term (< 3 ulps)
  return {sum, Integer(3 * (terms + 1))};
}

HPR pi_at_scale(long scale) {
  static std::mutex mutex;
  static std::map<long, HPR> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(scale); it != cache.end())
    return it->second;
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), computed with 5 extra digits
  const long work = scale + 5;
  auto [a, ea] = arctan_inverse(5, work);
  auto [b, eb] = arctan_inverse(239, work);
  HPR pi = HPR::from_parts(16 * a - 4 * b, work, 16 * ea + 4 * eb)
               .rescaled(scale);
  cache.emplace(scale, pi);
  return pi;
}

// sin(y) for |y| <= 1 by Taylor series with the alternating tail bound.
HPR sin_taylor(const HPR &y, long scale) {
  const HPR y2 = y * y;
  HPR term = y;
  HPR sum = y;
  const Rational ulp = make_rational(Integer(1), pow10(scale));
  for (long j = 1; term.magnitude_bound() > ulp; ++j) {
    term = -(term * y2) / Rational((2 * j) * (2 * j + 1));
    sum += term;
  }
  return sum.widened(ulp);
}

HPR cos_taylor(const HPR &y, long scale) {
  const HPR y2 = y * y;
  HPR term = one_at(scale);
  HPR sum = term;
  const Rational ulp = make_rational(Integer(1), pow10(scale));
  for (long j = 1; term.magnitude_bound() > ulp; ++j) {
    term = -(term * y2) / Rational((2 * j - 1) * (2 * j));
    sum += term;
  }
  return sum.widened(ulp);
}

// sin(x + quarter_turns * pi/2) at the given scale.
HPR sin_shifted(const HPR &x_in, long quarter_turns, long scale) {
  const HPR x = x_in.rescaled(std::max(scale, x_in.scale()));
  const HPR half_pi = pi_at_scale(x.scale() + 5) / Rational(2);
  // nearest multiple of pi/2 to the midpoint
  Rational ratio = x.midpoint() / half_pi.midpoint();
  Integer k = round_div(ratio.get_num(), ratio.get_den());
  HPR y = x - half_pi * Rational(k);
  Integer q4 = (k + quarter_turns) % 4;
  long quadrant = q4.get_si();
  if (quadrant < 0)
    quadrant += 4;
  y = y.rescaled(scale);
  switch (quadrant) {
  case 0:
    return sin_taylor(y, scale);
  case 1:
    return cos_taylor(y, scale);
  case 2:
    return -sin_taylor(y, scale);
  default:
    return -cos_taylor(y, scale);
  }
}

long require_integer_exponent(const Rational &s) {
  if (!is_integer(s) || s == 0)
    throw std::invalid_argument(
        "only nonzero integer s can be evaluated numerically, got " +
        to_string(s));
  if (!s.get_num().fits_slong_p())
    throw std::invalid_argument("s out of range");
  return s.get_num().get_si();
}

} // namespace

Rational oracle_tolerance(long digits) {
  return make_rational(Integer(1), pow10(std::max(0L, digits - kGuardDigits)));
}

HPR hp_pi(long digits) {
  if (digits < 1)
    throw std::invalid_argument("hp_pi needs digits >= 1");
  return pi_at_scale(digits + kGuardDigits).rescaled(digits);
}

HPR hp_sin(const HPR &x, long digits) {
  return sin_shifted(x, 0, digits + kGuardDigits).rescaled(digits);
}

HPR hp_cos(const HPR &x, long digits) {
  return sin_shifted(x, 1, digits + kGuardDigits).rescaled(digits);
}

HPR riesz_energy_direct(const Rational &s, long N, long digits) {
  const long e = require_integer_exponent(s);
  if (N < 2)
    throw std::invalid_argument("N must be >= 2");
  const long w = digits + kGuardDigits;
  const HPR pi = pi_at_scale(w);
  HPR sum = HPR::from_parts(0, w, 0);
  for (long k = 1; k <= N - 1; ++k) {
    HPR sk = sin_shifted(pi * make_rational(k, N), 0, w);
    sum += sk.pow(-e);
  }
  return (sum * (ipow(Rational(2), -e) * Rational(N))).rescaled(digits);
}

HPR modified_energy_direct(const Rational &s, long N, const Rational &r,
                           long digits) {
  const long e = require_integer_exponent(s);
  if (N < 2)
    throw std::invalid_argument("N must be >= 2");
  if (r < 0 || r >= 1)
    throw DomainError("r must lie in [0, 1)");
  const long w = digits + kGuardDigits;
  const HPR pi = pi_at_scale(w);
  const HPR base_const = HPR::from_rational(1 + r * r, w);
  HPR sum = HPR::from_parts(0, w, 0);
  for (long k = 1; k <= N - 1; ++k) {
    HPR c = sin_shifted(pi * make_rational(2 * k, N), 1, w);
    HPR base = base_const - c * (2 * r);
    HPR term = (e % 2 == 0) ? base.pow(-e / 2) : base.sqrt().pow(-e);
    sum += term;
  }
  return (sum * Rational(N)).rescaled(digits);
}

HPR hyp2f1_trunc(const Rational &a, const Rational &b, const Rational &c,
                 const Rational &z, long digits) {
  if (abs(z) >= 1)
    throw DomainError("hyp2f1_trunc needs |z| < 1");
  // terms are carried with extra digits so their rounding radius stays well
  // below the certification target
  const long w = digits + kGuardDigits;
  const Rational target = make_rational(Integer(1), pow10(w));
  const long work = w + kGuardDigits;
  const Rational bound_abc = std::max({abs(a), abs(b), abs(c)});
  constexpr long kMaxTerms = 200000;

  HPR term = one_at(work);
  HPR sum = term;
  for (long n = 0; n < kMaxTerms; ++n) {
    const Rational an = a + n, bn = b + n, cn = c + n;
    if (an == 0 || bn == 0 || z == 0)
      return sum.rescaled(digits);
    if (cn == 0)
      throw DomainError("2F1 lower parameter reaches a non-positive integer");
    term = term * (an * bn * z / (cn * (n + 1)));
    sum += term;
    const long j = n + 1; // index of the term just added
    if (Rational(j) <= bound_abc)
      continue;
    const Rational jj(j);
    Rational rho = abs(z) * (1 + abs(a) / jj) * (1 + abs(b) / jj) /
                   (1 - abs(c) / jj);
    if (rho >= 1)
      continue;
    Rational tail = term.magnitude_bound() * rho / (1 - rho);
    if (tail <= target)
      return sum.widened(tail).rescaled(digits);
  }
  throw NoConvergenceCertificate("2F1 tail majorant did not certify " +
                                 std::to_string(digits) + " digits");
}

Rational hyp2f1_terminating(const Rational &a, const Rational &b,
                            const Rational &c, const Rational &z) {
  auto non_positive_int = [](const Rational &x) {
    return is_integer(x) && x <= 0;
  };
  if (!non_positive_int(a) && !non_positive_int(b))
    throw std::invalid_argument("2F1 does not terminate");
  Rational term = 1, sum = 1;
  for (long n = 0;; ++n) {
    const Rational an = a + n, bn = b + n, cn = c + n;
    if (an == 0 || bn == 0)
      return sum;
    if (cn == 0)
      throw DomainError("2F1 lower parameter reaches a non-positive integer");
    term *= an * bn * z / (cn * (n + 1));
    sum += term;
  }
}

Rational g_n_prefactor(long m) {
  if (m < 1)
    throw std::invalid_argument("g_n_prefactor needs m >= 1");
  return make_rational(factorial(2 * m - 2),
                       factorial(m - 1) * factorial(m - 1));
}

namespace {

long require_even_s(long s) {
  if (s < 2 || s % 2 != 0)
    throw std::invalid_argument("s must be a positive even integer");
  return s / 2;
}

} // namespace

Rational g_n_eval(long s, long n, const Rational &r) {
  const long m = require_even_s(s);
  if (n < 0)
    throw std::invalid_argument("g_n_eval needs n >= 0");
  if (r < 0 || r >= 1)
    throw DomainError("r must lie in [0, 1)");
  const Rational w = 1 - r * r;
  Rational sum = 0;
  for (long k = 0; k <= m - 1; ++k) {
    Rational term = make_rational(factorial(2 * m - 2 - k),
                                  factorial(m - k - 1) * factorial(k));
    term *= pochhammer(Rational(n + 1 - m), k);
    term *= ipow(w, k + 1 - 2 * m);
    sum += term;
  }
  return sum * ipow(r, n) / Rational(factorial(m - 1));
}

Rational g_n_eval_hypergeometric(long s, long n, const Rational &r) {
  const long m = require_even_s(s);
  if (r < 0 || r >= 1)
    throw DomainError("r must lie in [0, 1)");
  const Rational w = 1 - r * r;
  return ipow(w, 1 - 2 * m) * g_n_prefactor(m) * ipow(r, n) *
         hyp2f1_terminating(Rational(1 - m), Rational(n + 1 - m),
                            Rational(2 - 2 * m), w);
}

HPR g_n_series(long s, long n, const Rational &r, long digits) {
  if (s < 1 || n < 0)
    throw std::invalid_argument("g_n_series needs s >= 1, n >= 0");
  const Rational half = make_rational(s, 2);
  Rational pre = pochhammer(half, n) / Rational(factorial(n)) * ipow(r, n);
  HPR f = hyp2f1_trunc(half, n + half, Rational(n + 1), r * r,
                       digits + kGuardDigits);
  return (f * pre).rescaled(digits);
}

Rational gegenbauer_at_one(long n, const Rational &lambda) {
  return pochhammer(2 * lambda, n) / Rational(factorial(n));
}

namespace {

Rational gegenbauer_weight(long a, long b, const Rational &lambda) {
  return pochhammer(lambda, a) * pochhammer(lambda, b) /
         Rational(factorial(a) * factorial(b));
}

} // namespace

HPR gegenbauer_c(long n, const Rational &lambda, const HPR &phi,
                 long digits) {
  if (n < 0)
    throw std::invalid_argument("gegenbauer_c needs n >= 0");
  if (lambda == 0)
    throw std::invalid_argument("gegenbauer_c needs lambda != 0");
  const long w = digits + kGuardDigits;
  const HPR angle = phi.rescaled(std::max(w, phi.scale()));
  HPR sum = HPR::from_parts(0, w, 0);
  for (long l = 0; l <= n; ++l) {
    HPR c = sin_shifted(angle * Rational(n - 2 * l), 1, w);
    sum += c * gegenbauer_weight(l, n - l, lambda);
  }
  return sum.rescaled(digits);
}

AnCheck a_n_check(long n, long s, long N, long digits) {
  if (n < 0 || s < 1 || N < 2)
    throw std::invalid_argument("a_n_check needs n >= 0, s >= 1, N >= 2");
  const Rational lambda = make_rational(s, 2);
  const Rational NN(N);
  const long w = digits + kGuardDigits;
  AnCheck out;

  const HPR pi = pi_at_scale(w);
  HPR sum = HPR::from_parts(0, w, 0);
  for (long k = 1; k <= N - 1; ++k)
    sum += gegenbauer_c(n, lambda, pi * make_rational(2 * k, N), w);
  out.lhs = (sum * NN).rescaled(digits);

  const Rational at_one = gegenbauer_at_one(n, lambda);
  Rational filtered = 0;
  for (long l = 0; l <= n; ++l)
    if ((n - 2 * l) % N == 0)
      filtered += gegenbauer_weight(l, n - l, lambda);
  out.rhs = NN * NN * filtered - NN * at_one;

  Rational split = 0;
  if (n % 2 == 0) {
    const long nu = n / 2;
    split = gegenbauer_weight(nu, nu, lambda) * NN * NN - at_one * NN;
    for (long l = 1; l <= nu; ++l)
      if ((2 * l) % N == 0)
        split += 2 * NN * NN * gegenbauer_weight(nu - l, nu + l, lambda);
  } else {
    const long nu = (n - 1) / 2;
    split = -at_one * NN;
    for (long l = 0; l <= nu; ++l)
      if ((2 * l + 1) % N == 0)
        split += 2 * NN * NN * gegenbauer_weight(nu - l, nu + 1 + l, lambda);
  }
  out.rhs_split = split;
  out.agree = out.rhs == out.rhs_split && out.lhs.contains(out.rhs) &&
              out.lhs.radius() <= oracle_tolerance(digits);
  return out;
}

Rational g_n_majorant_constant(long s, const Rational &r) {
  const long m = require_even_s(s);
  if (r < 0 || r >= 1)
    throw DomainError("r must lie in [0, 1)");
  // t^{m-1} / (1 - r^2 t)^{2m} is non-decreasing on [0, 1]: right endpoints
  // give an upper Riemann sum.
  constexpr long kCells = 256;
  const Rational r2 = r * r;
  Rational sum = 0;
  for (long i = 1; i <= kCells; ++i) {
    const Rational t = make_rational(i, kCells);
    sum += ipow(t, m - 1) * ipow(1 - r2 * t, -2 * m);
  }
  sum /= kCells;
  const Integer gamma_half_s = factorial(m - 1);
  return sum / Rational(gamma_half_s * gamma_half_s);
}

namespace {

// Gamma(n + s/2) / Gamma(n + 1 - s/2) for even s: prod_{j=1-m}^{m-1} (n + j).
Rational pochhammer_ratio(long n, long m) {
  Rational p = 1;
  for (long j = 1 - m; j <= m - 1; ++j)
    p *= n + j;
  return p;
}

} // namespace

Prop1SeriesCheck prop1_series_check(long s, long N, const Rational &r, long V,
                                    long digits) {
  const long m = require_even_s(s);
  if (N < 2 || V < 1)
    throw std::invalid_argument("prop1_series_check needs N >= 2, V >= 1");
  if (r <= 0 || r >= 1)
    throw DomainError("r must lie in (0, 1)");
  if ((V + 1) * N < m)
    throw std::invalid_argument("tail majorant needs (V+1) N >= s/2");
  const Rational NN(N);
  Prop1SeriesCheck out;

  Rational series = 0;
  for (long nu = 1; nu <= V; ++nu)
    series += g_n_eval(s, nu * N, r);
  out.partial_sum = NN * NN * g_n_eval(s, 0, r) - NN * ipow(1 - r, -s) +
                    2 * NN * NN * series;

  const long first = (V + 1) * N;
  Rational rho = ipow(r, N);
  for (long j = 1 - m; j <= m - 1; ++j)
    rho *= Rational(first + N + j) / Rational(first + j);
  if (rho >= 1)
    throw NoConvergenceCertificate("Prop 1 tail ratio is not below 1");
  const Rational lead = g_n_majorant_constant(s, r) *
                        pochhammer_ratio(first, m) * ipow(r, first);
  out.tail_majorant = 2 * NN * NN * lead / (1 - rho);

  out.closed = modified_energy_closed(m, N, r);
  out.direct = modified_energy_direct(Rational(s), N, r, digits);
  const Rational lo = out.partial_sum;
  const Rational hi = out.partial_sum + out.tail_majorant;
  const Rational mid = out.direct.midpoint();
  const Rational rad = out.direct.radius();
  out.within = out.closed >= lo && out.closed <= hi && mid + rad >= lo &&
               mid - rad <= hi;
  return out;
}

} // namespace riesz
