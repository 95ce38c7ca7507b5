#include "riesz/verify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "riesz/bernoulli.hpp"
#include "riesz/combinatorics.hpp"
#include "riesz/energy.hpp"
#include "riesz/lemmas.hpp"
#include "riesz/numeric.hpp"
#include "riesz/power_series.hpp"

namespace riesz {
namespace {

class Report {
public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  // Runs `body`, which appends failure witnesses to the stream. Exceptions
  // count as failures.
  void check(std::string id, const std::function<void(std::ostream &)> &body) {
    std::ostringstream witness;
    bool ok = false;
    try {
      body(witness);
      ok = witness.str().empty();
    } catch (const std::exception &e) {
      witness << "exception: " << e.what();
    }
    results_.push_back({suite_, std::move(id), ok, witness.str()});
  }

  void note(std::string id, std::string detail) {
    results_.push_back({suite_, std::move(id), true, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

// Records only the first few mismatches of a grid.
class Witness {
public:
  explicit Witness(std::ostream &out) : out_(out) {}
  template <class F> void fail(F &&write) {
    if (count_++ < 3) {
      if (count_ > 1)
        out_ << "; ";
      write(out_);
    } else if (count_ == 4) {
      out_ << "; ...";
    }
  }

private:
  std::ostream &out_;
  int count_ = 0;
};

bool encloses(const HighPrecisionReal &x, const Rational &exact,
              const Rational &tol) {
  return x.contains(exact) && x.radius() <= tol;
}

std::string str(const Rational &x) { return to_string(x); }

const std::vector<Rational> &radii() {
  static const std::vector<Rational> r = {make_rational(1, 4),
                                          make_rational(1, 2),
                                          make_rational(3, 4)};
  return r;
}

Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  return make_rational(num(rng), den(rng));
}

// ---------------------------------------------------------------- prop1

std::vector<CheckResult> suite_prop1(const VerifyOptions &opt) {
  Report rep("prop1");
  const Rational tol = oracle_tolerance(opt.digits);

  rep.check("negative examples", [](std::ostream &os) {
    const struct { long m, N; long want; } cases[] = {{1, 2, 8}, {2, 2, 32},
                                                      {1, 3, 18}};
    for (auto c : cases)
      if (energy_negative(c.m, c.N) != c.want)
        os << "L_{-" << 2 * c.m << "}(" << c.N << ") = "
           << str(energy_negative(c.m, c.N)) << ", expected " << c.want;
  });

  for (long m = 1; m <= opt.max_m; ++m) {
    rep.check("negative m=" + std::to_string(m), [&](std::ostream &os) {
      Witness w(os);
      for (long N = 2; N <= 20; ++N) {
        const Rational exact = energy_negative(m, N);
        const auto direct = riesz_energy_direct(Rational(-2 * m), N, opt.digits);
        if (!encloses(direct, exact, tol))
          w.fail([&](std::ostream &o) {
            o << "N=" << N << " exact " << str(exact) << " direct "
              << direct.to_decimal(static_cast<int>(opt.digits));
          });
      }
    });
  }

  for (long s : {2L, 4L}) {
    rep.check("gegenbauer s=" + std::to_string(s), [&](std::ostream &os) {
      Witness w(os);
      for (long n = 0; n <= 8; ++n)
        for (long N = 2; N <= 5; ++N) {
          const AnCheck c = a_n_check(n, s, N, 30);
          if (!c.agree)
            w.fail([&](std::ostream &o) {
              o << "n=" << n << " N=" << N << " lhs " << c.lhs.to_decimal(30)
                << " rhs " << str(c.rhs) << " split " << str(c.rhs_split);
            });
        }
    });
  }

  rep.check("g_n forms", [&](std::ostream &os) {
    Witness w(os);
    for (long s : {2L, 4L, 6L})
      for (long n = 0; n <= 10; ++n)
        for (const Rational &r : radii()) {
          const Rational poly = g_n_eval(s, n, r);
          const Rational hyp = g_n_eval_hypergeometric(s, n, r);
          const auto series = g_n_series(s, n, r, 30);
          if (poly != hyp || !encloses(series, poly, oracle_tolerance(30)))
            w.fail([&](std::ostream &o) {
              o << "s=" << s << " n=" << n << " r=" << str(r) << " poly "
                << str(poly) << " 2F1 " << str(hyp) << " series "
                << series.to_decimal(30);
            });
        }
  });

  rep.check("series s=4 N=3 r=1/2 V=200", [&](std::ostream &os) {
    const auto c = prop1_series_check(4, 3, make_rational(1, 2), 200,
                                      opt.digits);
    if (!c.within)
      os << "partial " << to_decimal(c.partial_sum, 30) << " tail "
         << to_decimal(c.tail_majorant, 5) << " closed " << str(c.closed);
  });

  return rep.take();
}

// ---------------------------------------------------------------- prop2

std::vector<CheckResult> suite_prop2(const VerifyOptions &opt) {
  Report rep("prop2");
  const Rational tol = oracle_tolerance(opt.digits);

  rep.check("examples", [](std::ostream &os) {
    const Rational half = make_rational(1, 2);
    if (modified_energy_closed(1, 2, half) != make_rational(8, 9))
      os << "M_2(2;1/2) = " << str(modified_energy_closed(1, 2, half));
    if (modified_energy_closed(1, 3, half) != make_rational(24, 7))
      os << "M_2(3;1/2) = " << str(modified_energy_closed(1, 3, half));
  });

  rep.check("s=2 form", [](std::ostream &os) {
    Witness w(os);
    for (long N = 2; N <= 6; ++N)
      for (const Rational &r : radii())
        if (modified_energy_closed(1, N, r) != modified_energy_s2(N, r))
          w.fail([&](std::ostream &o) {
            o << "N=" << N << " r=" << str(r) << " closed "
              << str(modified_energy_closed(1, N, r)) << " display "
              << str(modified_energy_s2(N, r));
          });
  });

  for (long m = 1; m <= std::min(opt.max_m, 4L); ++m) {
    rep.check("closed m=" + std::to_string(m), [&](std::ostream &os) {
      Witness w(os);
      for (long N = 2; N <= 6; ++N)
        for (const Rational &r : radii()) {
          const Rational exact = modified_energy_closed(m, N, r);
          const auto direct =
              modified_energy_direct(Rational(2 * m), N, r, opt.digits);
          if (!encloses(direct, exact, tol))
            w.fail([&](std::ostream &o) {
              o << "N=" << N << " r=" << str(r) << " exact " << str(exact)
                << " direct "
                << direct.to_decimal(static_cast<int>(opt.digits));
            });
        }
    });
  }
  return rep.take();
}

// ---------------------------------------------------------------- prop3

std::vector<CheckResult> suite_prop3(const VerifyOptions &opt) {
  Report rep("prop3");

  rep.check("displays", [](std::ostream &os) {
    const std::vector<Rational> m1 = {make_rational(-1, 12), 0,
                                      make_rational(1, 12)};
    const std::vector<Rational> m2 = {make_rational(-11, 720), 0,
                                      make_rational(1, 72), 0,
                                      make_rational(1, 720)};
    if (beta_coeffs(1).beta != m1)
      os << "beta(1) differs";
    if (beta_coeffs(2).beta != m2)
      os << "beta(2) differs";
  });

  rep.check("branch assembly m=1", [](std::ostream &os) {
    if (beta_branch_assembly(1) != beta_coeffs(1))
      os << "five-branch assembly at m=1 differs from (-1/12, 0, 1/12)";
  });

  for (long m = 1; m <= opt.max_m; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    rep.check("triple agreement " + tag, [&](std::ostream &os) {
      const auto ledger = beta_coeffs(m);
      const auto bern = beta_via_bernoulli(m);
      const auto expn = beta_via_expansion(m);
      for (std::size_t nu = 0; nu < ledger.beta.size(); ++nu) {
        if (ledger.beta[nu] != bern.beta[nu] ||
            ledger.beta[nu] != expn.beta[nu])
          os << "nu=" << nu << ": " << str(ledger.beta[nu]) << " / "
             << str(bern.beta[nu]) << " / " << str(expn.beta[nu]) << " ";
        if (nu % 2 == 1 && ledger.beta[nu] != 0)
          os << "odd nu=" << nu << " nonzero ";
      }
      if (ledger.beta.back() <= 0)
        os << "leading coefficient not positive";
    });

    rep.check("expansion energy " + tag, [&](std::ostream &os) {
      for (long N = 2; N <= 10; ++N)
        if (energy_via_expansion(m, N) != energy_positive(m, N))
          os << "N=" << N << " ";
    });

    rep.check("collapse " + tag, [&](std::ostream &os) {
      for (long N = 2; N <= 10; ++N)
        if (collapse_coefficient(m, N) != N)
          os << "N=" << N << " gives " << str(collapse_coefficient(m, N))
             << " ";
    });

    // Advisory: a single point has empty energy, so the polynomial should
    // vanish at N = 1. A miss is reported as a warning, not a failure.
    const Rational at_one = beta_coeffs(m).evaluate(Rational(1));
    rep.note("sum rule " + tag,
             at_one == 0 ? "" : "warning: sum of beta is " + str(at_one));
  }

  rep.check("collapse binomial m<=10", [](std::ostream &os) {
    for (long m = 1; m <= 10; ++m)
      if (collapse_binomial_sum(m) != ipow(Integer(2), static_cast<unsigned long>(2 * m - 2)))
        os << "m=" << m << " ";
  });
  return rep.take();
}

// ---------------------------------------------------------------- prop4

std::vector<CheckResult> suite_prop4(const VerifyOptions &opt) {
  Report rep("prop4");
  for (long m = 1; m <= opt.max_m; ++m)
    rep.check("m=" + std::to_string(m), [&](std::ostream &os) {
      const Prop4Result r = prop4_check(m);
      if (!r.equal)
        os << "lhs " << str(r.lhs) << " rhs " << str(r.rhs);
    });
  return rep.take();
}

// ---------------------------------------------------------------- appendix

// Li_{-n}(z) = sum_{k>=1} k^n z^k truncated after K terms, with a bound on
// the omitted tail from the ratio ((k+1)/k)^n |z| at k = K+1.
std::pair<Rational, Rational> polylog_partial(long n, const Rational &z,
                                             long K) {
  Rational sum = 0, zk = 1;
  for (long k = 1; k <= K; ++k) {
    zk *= z;
    sum += ipow(Rational(k), n) * zk;
  }
  const Rational rho =
      ipow(make_rational(K + 2, K + 1), n) * abs(z);
  const Rational first = ipow(Rational(K + 1), n) * abs(zk * z);
  return {sum, first / (1 - rho)};
}

std::vector<CheckResult> suite_appendix(const VerifyOptions &opt) {
  Report rep("appendix");
  std::mt19937_64 rng(opt.seed);

  rep.check("aux.2 shifted stirling", [&](std::ostream &os) {
    Witness w(os);
    for (int trial = 0; trial < 6; ++trial) {
      const Rational x = random_rational(rng), y = random_rational(rng);
      for (long n = 0; n <= 8; ++n) {
        Rational sum = 0;
        for (long l = 0; l <= n; ++l)
          sum += shifted_stirling(n, l, y) * ipow(x, l);
        if (sum != pochhammer(x + y, n))
          w.fail([&](std::ostream &o) {
            o << "n=" << n << " x=" << str(x) << " y=" << str(y);
          });
      }
    }
  });

  rep.check("aux.3 polylog forms", [](std::ostream &os) {
    Witness w(os);
    const Rational zs[] = {make_rational(1, 2), make_rational(-1, 2),
                           make_rational(1, 3), make_rational(9, 10)};
    for (long n = 1; n <= 6; ++n)
      for (const Rational &z : zs) {
        const auto [partial, tail] = polylog_partial(n, z, 800);
        const Rational b_form = polylog_neg(n, z);
        const Rational eul = polylog_neg_eulerian(n, z);
        if (b_form != eul || abs(b_form - partial) > tail)
          w.fail([&](std::ostream &o) {
            o << "n=" << n << " z=" << str(z) << " b-form " << str(b_form)
              << " eulerian " << str(eul);
          });
      }
  });

  rep.check("aux.3 b limits", [](std::ostream &os) {
    // The sum defining b(p+q, p) may stop at q or at n-l; both agree.
    for (long p = 0; p <= 10; ++p)
      for (long q = 0; p + q <= 10; ++q) {
        Integer alt = 0;
        for (long j = 0; j <= q; ++j)
          alt += eulerian(p + q, j) * binomial_int(p + q - j, p);
        if (alt != b_coeff(p + q, p))
          os << "p=" << p << " q=" << q << " ";
      }
  });

  rep.check("aux.4 pochhammer lattice series", [&](std::ostream &os) {
    Witness w(os);
    const Rational zs[] = {make_rational(1, 2), make_rational(-1, 2),
                           make_rational(1, 3)};
    constexpr long kTerms = 300;
    for (long k = 0; k <= 5; ++k) {
      const Rational a = random_rational(rng), b = random_rational(rng);
      const GSeriesClosedForm closed = poch_series_closed(k, a, b);
      for (const Rational &z : zs) {
        Rational sum = pochhammer(b, k), zn = 1;
        for (long nu = 1; nu <= kTerms; ++nu) {
          zn *= z;
          sum += 2 * pochhammer(nu * a + b, k) * zn;
        }
        // |(nu a + b)_k| <= (nu |a| + |b| + k)^k; the ratio of consecutive
        // bounds decreases in nu.
        const Rational c = abs(b) + k;
        auto bound = [&](long nu) { return ipow(nu * abs(a) + c, k); };
        const long first = kTerms + 1;
        const Rational rho = bound(first + 1) / bound(first) * abs(z);
        const Rational tail =
            2 * bound(first) * abs(zn * z) / (1 - rho);
        if (abs(closed.evaluate(z) - sum) > tail)
          w.fail([&](std::ostream &o) {
            o << "k=" << k << " a=" << str(a) << " b=" << str(b)
              << " z=" << str(z);
          });
      }
    }
  });

  rep.check("aux.5 h derivatives", [](std::ostream &os) {
    for (long N = 1; N <= 12; ++N)
      for (long n = 0; n <= 8; ++n) {
        // d^n/dr^n sum_{l<N} r^l at r = 1, term by term
        Rational sum = 0;
        for (long l = n; l < N; ++l)
          sum += falling_factorial(Rational(l), n);
        if (sum != h_deriv_at_1(n, N))
          os << "n=" << n << " N=" << N << " ";
      }
  });

  rep.check("aux.6 taylor coefficients", [](std::ostream &os) {
    Witness w(os);
    constexpr int kOrder = 8;
    for (long N = 1; N <= 10; ++N) {
      // h(1 + t) = sum_j C(N, j+1) t^j
      std::vector<Rational> h(kOrder + 1);
      for (int j = 0; j <= kOrder; ++j)
        h[j] = binomial(N, j + 1);
      const PowerSeries hs(h);
      for (long q = 1; q <= 5; ++q) {
        const PowerSeries f = series_int_pow(hs, -q);
        for (int n = 0; n <= kOrder; ++n)
          if (f[n] * Rational(factorial(n)) != f_deriv_at_1(n, q, N))
            w.fail([&](std::ostream &o) {
              o << "n=" << n << " q=" << q << " N=" << N;
            });
      }
    }
  });

  rep.check("aux.6 remainder bound", [](std::ostream &os) {
    Witness w(os);
    const Rational rs[] = {make_rational(9, 10), make_rational(99, 100)};
    for (const Rational &r : rs)
      for (long q = 1; q <= 3; ++q)
        for (long N : {2L, 3L, 5L})
          for (long m = 1; m <= 5; ++m) {
            Rational taylor = 0;
            for (long n = 0; n <= m; ++n)
              taylor += f_deriv_at_1(n, q, N) / Rational(factorial(n)) *
                        ipow(r - 1, n);
            const Rational remainder = f_value(q, N, r) - taylor;
            const Rational bound = f_remainder_bound(m, q, N, r);
            if (abs(remainder) > bound)
              w.fail([&](std::ostream &o) {
                o << "r=" << str(r) << " q=" << q << " N=" << N << " m=" << m
                  << " |R|=" << to_decimal(abs(remainder), 12) << " bound "
                  << to_decimal(bound, 12);
              });
          }
  });

  rep.check("aux.7 bell paths", [](std::ostream &os) {
    Witness w(os);
    for (long n = 1; n <= 8; ++n)
      for (long k = 1; k <= n; ++k) {
        for (long N = 1; N <= 10; ++N) {
          const auto paths = bell_binomial_paths(n, k, N);
          if (!paths.agree())
            w.fail([&](std::ostream &o) {
              o << "n=" << n << " k=" << k << " N=" << N << ": "
                << str(paths.direct) << " / " << str(paths.compositions)
                << " / " << str(paths.h_polynomial);
            });
        }
        for (long l = 0; l < k; ++l)
          if (H_coeff(l, n, k) != 0)
            w.fail([&](std::ostream &o) {
              o << "H_" << l << "(" << n << "," << k << ") nonzero";
            });
      }
  });

  rep.check("aux.7b special values", [](std::ostream &os) {
    Witness w(os);
    std::vector<Rational> xs;
    for (long i = 1; i <= 9; ++i)
      xs.push_back(make_rational(1, i + 1));
    for (long n = 1; n <= 8; ++n)
      for (long k = 1; k <= 8; ++k) {
        const Integer top = (k <= n) ? Integer(factorial(2 * n) / ipow(Integer(2), static_cast<unsigned long>(n)) *
                                               binomial_int(n, k))
                                     : Integer(0);
        if (H_coeff(n + k, n, n) != top)
          w.fail([&](std::ostream &o) {
            o << "H_{n+k}(n,n) n=" << n << " k=" << k;
          });
        const Rational bell = Rational(factorial(k) * factorial(n + k)) /
                              Rational(factorial(n)) *
                              bell_partial(n, k, std::span(xs).first(n));
        Integer multi = 0;
        if (k <= n)
          for_each_composition(n + k, k, n + 1,
                               [&](std::span<const long> parts) {
                                 if (std::all_of(parts.begin(), parts.end(),
                                                 [](long p) { return p >= 2; }))
                                   multi += multinomial(parts).get_num();
                               });
        if (Rational(H_coeff(n + k, n, k)) != bell || H_coeff(n + k, n, k) != multi)
          w.fail([&](std::ostream &o) {
            o << "H_{n+k}(n,k) n=" << n << " k=" << k;
          });
      }
  });

  rep.check("cor.8b generating function", [](std::ostream &os) {
    constexpr int kOrder = 12;
    // (e^x - 1)/x = sum x^j/(j+1)!
    std::vector<Rational> base(kOrder + 1);
    for (int j = 0; j <= kOrder; ++j)
      base[j] = Rational(1) / Rational(factorial(j + 1));
    for (long q = 1; q <= 5; ++q) {
      const PowerSeries f = series_int_pow(PowerSeries(base), -q);
      for (int n = 0; n <= kOrder; ++n) {
        const Rational want = f[n] - (n == 0 ? 1 : 0);
        if (sign_pow(n) * G_coeff(n, n, q) != want)
          os << "q=" << q << " n=" << n << " ";
      }
    }
  });

  rep.check("g examples", [](std::ostream &os) {
    if (g_coeff(3, 3, Rational(5), Rational(-2)) != 750)
      os << "g(3,3;5,-2) != 750 ";
    if (G_coeff(2, 2, 1) != make_rational(1, 12))
      os << "G(2,2,1) != 1/12 ";
    if (shifted_stirling(2, 1, make_rational(1, 2)) != 2)
      os << "s(2,1;1/2) != 2 ";
  });

  return rep.take();
}

// ---------------------------------------------------------------- oracle

std::vector<CheckResult> suite_oracle(const VerifyOptions &opt) {
  Report rep("oracle");
  const Rational tol = oracle_tolerance(opt.digits);
  for (long m = 1; m <= std::min(opt.max_m, 5L); ++m)
    rep.check("positive m=" + std::to_string(m), [&](std::ostream &os) {
      Witness w(os);
      for (long N = 2; N <= 30; ++N) {
        const Rational exact = energy_positive(m, N);
        const auto direct = riesz_energy_direct(Rational(2 * m), N, opt.digits);
        if (!encloses(direct, exact, tol))
          w.fail([&](std::ostream &o) {
            o << "N=" << N << " exact " << str(exact) << " direct "
              << direct.to_decimal(static_cast<int>(opt.digits));
          });
      }
    });
  return rep.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions &);

SuiteFn find_suite(std::string_view name) {
  if (name == "prop1") return suite_prop1;
  if (name == "prop2") return suite_prop2;
  if (name == "prop3") return suite_prop3;
  if (name == "prop4") return suite_prop4;
  if (name == "appendix") return suite_appendix;
  if (name == "oracle") return suite_oracle;
  return nullptr;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {
      "appendix", "oracle", "prop1", "prop2", "prop3", "prop4"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name,
                                   const VerifyOptions &options) {
  if (options.max_m < 1)
    throw std::invalid_argument("max-m must be >= 1");
  if (options.digits < kGuardDigits + 1)
    throw std::invalid_argument("digits must be > " +
                                std::to_string(kGuardDigits));
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const auto &n : suite_names()) {
      auto part = find_suite(n)(options);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (SuiteFn fn = find_suite(name)) {
    out = fn(options);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.suite != b.suite)
      return a.suite < b.suite;
    return natural_less(a.id, b.id);
  });
  return out;
}

bool all_passed(const std::vector<CheckResult> &results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult &r) { return r.passed; });
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)); };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view da = a.substr(i, ie - i), db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size())
        return da.size() < db.size();
      if (da != db)
        return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j])
        return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

} // namespace riesz
