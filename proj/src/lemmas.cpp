#include "riesz/lemmas.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "riesz/combinatorics.hpp"
#include "riesz/errors.hpp"

namespace riesz {

Rational shifted_stirling(long n, long l, const Rational &y) {
  if (n < 0)
    throw std::invalid_argument("shifted_stirling needs n >= 0");
  if (l < 0 || l > n)
    return 0;
  const Rational base = y + (n - 1);
  Rational sum = 0;
  Rational power = 1; // base^{k-l}
  for (long k = l; k <= n; ++k) {
    sum += binomial(k, l) * Rational(stirling1_signed(n, k)) * power;
    power *= base;
  }
  return sum;
}

Integer b_coeff(long n, long l) {
  if (n < 0)
    throw std::invalid_argument("b_coeff needs n >= 0");
  if (l < 0 || l > n)
    return 0;
  Integer sum = 0;
  for (long j = 0; j <= n - l; ++j)
    sum += eulerian(n, j) * binomial_int(n - j, l);
  return sum;
}

Rational polylog_neg(long n, const Rational &z) {
  if (n < 1)
    throw std::invalid_argument("polylog_neg needs n >= 1");
  if (z == 1)
    throw PoleAtOne("Li_{-n}(z) has a pole at z = 1");
  const Rational w = 1 - z;
  Rational num = Rational(factorial(n));
  Rational wpow = 1;
  for (long l = 1; l <= n; ++l) {
    wpow *= w;
    num += sign_pow(l) * Rational(b_coeff(n, l)) * wpow;
  }
  return num / ipow(w, n + 1);
}

Rational polylog_neg_eulerian(long n, const Rational &z) {
  if (n < 1)
    throw std::invalid_argument("polylog_neg_eulerian needs n >= 1");
  if (z == 1)
    throw PoleAtOne("Li_{-n}(z) has a pole at z = 1");
  Rational num = 0;
  for (long j = 0; j < n; ++j)
    num += Rational(eulerian(n, j)) * ipow(z, n - j);
  return num / ipow(1 - z, n + 1);
}

Rational g_coeff(long k, long q, const Rational &a, const Rational &b) {
  if (k < 0 || q < 0 || q > k)
    throw IndexOutOfRange("g(k,q;a,b) needs 0 <= q <= k, got k=" +
                          std::to_string(k) + " q=" + std::to_string(q));
  Rational sum = 0;
  for (long p = 0; p <= k - q; ++p) {
    Rational term = shifted_stirling(k, p + q, b) *
                    Rational(b_coeff(p + q, p)) * ipow(a, p + q);
    sum += sign_pow(p) * term;
  }
  return sum;
}

Rational GSeriesClosedForm::evaluate(const Rational &z) const {
  if (z == 1)
    throw PoleAtOne("closed form has poles at z = 1");
  const Rational inv = 1 / (1 - z);
  Rational sum = constant;
  Rational power = inv;
  for (const auto &c : pole_coefficients) {
    sum += c * power;
    power *= inv;
  }
  return sum;
}

GSeriesClosedForm poch_series_closed(long k, const Rational &a,
                                     const Rational &b) {
  if (k < 0)
    throw std::invalid_argument("poch_series_closed needs k >= 0");
  GSeriesClosedForm form;
  form.constant = -pochhammer(b, k);
  form.pole_coefficients.reserve(static_cast<std::size_t>(k) + 1);
  for (long q = 0; q <= k; ++q)
    form.pole_coefficients.push_back(2 * g_coeff(k, q, a, b));
  return form;
}

Rational h_deriv_at_1(long n, long N) {
  if (n < 0 || N < 1)
    throw std::invalid_argument("h_deriv_at_1 needs n >= 0, N >= 1");
  return Rational(factorial(n) * binomial_int(N, n + 1));
}

void for_each_composition(
    long total, long parts, long max_part,
    const std::function<void(std::span<const long>)> &visit) {
  if (parts <= 0 || total < parts || total > parts * max_part)
    return;
  std::vector<long> current(static_cast<std::size_t>(parts));
  // prune: the remaining slots must be able to absorb what is left
  std::function<void(long, long)> rec = [&](long slot, long remaining) {
    const long slots_left = parts - slot - 1;
    if (slots_left == 0) {
      if (remaining >= 1 && remaining <= max_part) {
        current[slot] = remaining;
        visit(current);
      }
      return;
    }
    const long lo = std::max(1L, remaining - slots_left * max_part);
    const long hi = std::min(max_part, remaining - slots_left);
    for (long v = lo; v <= hi; ++v) {
      current[slot] = v;
      rec(slot + 1, remaining - v);
    }
  };
  rec(0, total);
}

namespace {

// Coefficients of x(x+1)...(x+j-1) = sum_l |s(j, l)| x^l.
std::vector<Integer> rising_poly(long j) {
  std::vector<Integer> p(static_cast<std::size_t>(j) + 1);
  for (long l = 0; l <= j; ++l)
    p[l] = abs(stirling1_signed(j, l));
  return p;
}

std::vector<Integer> poly_mul(const std::vector<Integer> &a,
                              const std::vector<Integer> &b) {
  std::vector<Integer> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

std::mutex h_mutex;
std::map<std::pair<long, long>, std::vector<Integer>> h_cache;

std::mutex g_mutex;
std::map<std::pair<long, long>, std::vector<Rational>> g_cache;

} // namespace

const std::vector<Integer> &h_coeff_polynomial(long n, long k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("H_l(n,k) needs n, k >= 1");
  {
    std::lock_guard lock(h_mutex);
    if (auto it = h_cache.find({n, k}); it != h_cache.end())
      return it->second;
  }
  std::vector<Integer> h(static_cast<std::size_t>(n + k) + 1);
  const Integer top = factorial(n + k);
  for_each_composition(n, k, n, [&](std::span<const long> parts) {
    Integer multinom = top;
    std::vector<Integer> poly{Integer(1)};
    for (long part : parts) {
      multinom /= factorial(part + 1);
      poly = poly_mul(poly, rising_poly(part + 1));
    }
    for (std::size_t l = 0; l < poly.size() && l < h.size(); ++l)
      h[l] += multinom * poly[l];
  });
  std::lock_guard lock(h_mutex);
  // std::map never invalidates references, so the entry can be handed out
  auto [it, inserted] = h_cache.emplace(std::make_pair(n, k), std::move(h));
  return it->second;
}

Integer H_coeff(long l, long n, long k) {
  if (l < 0 || l > n + k)
    return 0;
  return h_coeff_polynomial(n, k)[l];
}

BellBinomialPaths bell_binomial_paths(long n, long k, long N) {
  if (n < 1 || k < 1 || N < 1)
    throw std::invalid_argument("bell_binomial needs n, k, N >= 1");
  BellBinomialPaths paths;

  std::vector<Rational> xs;
  for (long j = 1; j <= n; ++j)
    xs.push_back(Rational(factorial(j) * binomial_int(N, j + 1)));
  paths.direct = bell_partial(n, k, xs);

  Integer comp_sum = 0;
  if (N >= 2) {
    for_each_composition(n, k, N - 1, [&](std::span<const long> parts) {
      Integer prod = 1;
      for (long part : parts)
        prod *= binomial_int(N, part + 1);
      comp_sum += prod;
    });
  }
  paths.compositions =
      make_rational(factorial(n) * comp_sum, factorial(k));

  if (k > n) {
    paths.h_polynomial = 0;
  } else {
    Rational acc = 0;
    for (long l = k; l <= k + n; ++l) {
      Rational term = Rational(H_coeff(l, n, k)) * ipow(Rational(N), l);
      acc += sign_pow(n - l + k) * term;
    }
    paths.h_polynomial =
        acc * make_rational(factorial(n), factorial(k) * factorial(n + k));
  }
  return paths;
}

Rational bell_binomial(long n, long k, long N) {
  if (n < 1 || k < 1 || N < 1)
    throw std::invalid_argument("bell_binomial needs n, k, N >= 1");
  std::vector<Rational> xs;
  for (long j = 1; j <= n; ++j)
    xs.push_back(Rational(factorial(j) * binomial_int(N, j + 1)));
  return bell_partial(n, k, xs);
}

Rational f_deriv_at_1(long n, long q, long N) {
  if (n < 0 || q < 1 || N < 1)
    throw std::invalid_argument("f_deriv_at_1 needs n >= 0, q >= 1, N >= 1");
  const Rational NN(N);
  if (n == 0)
    return ipow(NN, -q);
  std::vector<Rational> xs;
  for (long j = 1; j <= n; ++j)
    xs.push_back(h_deriv_at_1(j, N));
  Rational sum = 0;
  for (long k = 1; k <= n; ++k) {
    Rational term = pochhammer(Rational(q), k) * ipow(NN, -q - k) *
                    bell_partial(n, k, xs);
    sum += sign_pow(k) * term;
  }
  return sum;
}

Rational f_value(long q, long N, const Rational &r) {
  Rational h = 0;
  Rational power = 1;
  for (long l = 0; l < N; ++l) {
    h += power;
    power *= r;
  }
  return ipow(h, -q);
}

Rational f_remainder_bound(long m, long q, long N, const Rational &r) {
  if (m < 0 || q < 1 || N < 1)
    throw std::invalid_argument("f_remainder_bound needs m >= 0, q, N >= 1");
  if (r <= 0 || r >= 1)
    throw DomainError("f_remainder_bound needs 0 < r < 1");
  std::vector<Rational> xs;
  for (long j = 1; j <= m + 1; ++j)
    xs.push_back(h_deriv_at_1(j, N));
  Rational sum = 0;
  for (long k = 1; k <= m + 1; ++k)
    sum += pochhammer(Rational(q), k) * f_value(q + k, N, r) *
           bell_partial(m + 1, k, xs);
  return sum * ipow(1 - r, m + 1) / Rational(factorial(m + 1));
}

Rational G_coeff(long n, long l, long q) {
  if (n < 0 || q < 1)
    throw std::invalid_argument("G_coeff needs n >= 0, q >= 1");
  if (n == 0 || l < 0 || l > n)
    return 0;
  {
    std::lock_guard lock(g_mutex);
    if (auto it = g_cache.find({n, q}); it != g_cache.end())
      return it->second[l];
  }
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
  for (long k = 1; k <= n; ++k) {
    Rational weight = pochhammer(Rational(q), k) /
                      Rational(factorial(k) * factorial(n + k));
    weight *= sign_pow(n - k);
    const auto &h = h_coeff_polynomial(n, k);
    for (long ell = 0; ell <= n; ++ell)
      row[ell] += weight * Rational(h[ell + k]);
  }
  std::lock_guard lock(g_mutex);
  auto [it, inserted] = g_cache.emplace(std::make_pair(n, q), std::move(row));
  return it->second[l];
}

} // namespace riesz
