#include "riesz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

#include "riesz/energy.hpp"
#include "riesz/errors.hpp"
#include "riesz/numeric.hpp"
#include "riesz/verify.hpp"

namespace riesz {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long kMaxM = 8;
constexpr int kDecimalDigits = 30;

// Upper bound on x >= 0 printed with two significant digits, e.g. "2.1e-50".
std::string format_bound(const Rational &x) {
  if (x == 0)
    return "0";
  long e = 0;
  Rational y = x;
  while (y >= 10) {
    y /= 10;
    ++e;
  }
  while (y < 1) {
    y *= 10;
    --e;
  }
  // y in [1, 10): round up to one decimal place
  Rational scaled = y * 10;
  Integer up = ceil_div(scaled.get_num(), scaled.get_den());
  if (up >= 100) {
    up /= 10;
    ++e;
  }
  std::string digits = up.get_str();
  return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
}

void require_digits(long digits) {
  if (digits <= kGuardDigits || digits > 2000)
    throw UsageError("numeric-digits must lie in " +
                     std::to_string(kGuardDigits + 1) + "..2000");
}

// Fills "numeric_check"; returns false when the oracle misses the exact value.
bool numeric_check(Json &doc, const Rational &exact,
                   const HighPrecisionReal &direct, long digits) {
  const Rational diff = abs(direct.midpoint() - exact) + direct.radius();
  doc["numeric_check"] = {
      {"value", direct.to_decimal(static_cast<int>(digits))},
      {"abs_diff_bound", format_bound(diff)}};
  return direct.contains(exact) && diff <= oracle_tolerance(digits);
}

int cmd_energy(long s, long n, std::optional<long> digits, Json &doc) {
  if (s == 0 || s % 2 != 0)
    throw UsageError("s must be a nonzero even integer");
  if (n < 2)
    throw UsageError("n must be an integer >= 2");
  const long m = std::abs(s) / 2;
  if (s > 0 && m > kMaxM)
    throw UsageError("positive s must be at most " + std::to_string(2 * kMaxM));
  if (digits)
    require_digits(*digits);

  const Rational exact = s > 0 ? energy_positive(m, n) : energy_negative(m, n);
  doc["s"] = s;
  doc["n"] = n;
  doc["exact"] = to_string(exact);
  doc["decimal"] = to_decimal(exact, digits ? static_cast<int>(*digits)
                                            : kDecimalDigits);
  if (!digits)
    return kExitOk;
  const auto direct = riesz_energy_direct(Rational(s), n, *digits);
  return numeric_check(doc, exact, direct, *digits) ? kExitOk : kExitMismatch;
}

int cmd_coeffs(long m, const std::string &method, Json &doc) {
  if (m < 1 || m > kMaxM)
    throw UsageError("m must lie in 1.." + std::to_string(kMaxM));
  const EnergyPolynomial ledger = beta_coeffs(m);
  const EnergyPolynomial bern = beta_via_bernoulli(m);
  const EnergyPolynomial expn = beta_via_expansion(m);
  const EnergyPolynomial &chosen = method == "bernoulli"   ? bern
                                   : method == "expansion" ? expn
                                                           : ledger;
  const bool agree = ledger == bern && ledger == expn;
  Json beta = Json::array();
  for (const Rational &b : chosen.beta)
    beta.push_back(to_string(b));
  doc["m"] = m;
  doc["method"] = method;
  doc["beta"] = beta;
  doc["methods_agree"] = agree;
  return agree ? kExitOk : kExitMismatch;
}

int cmd_modified(long m, long n, const std::string &r_text,
                 std::optional<long> digits, Json &doc) {
  if (m < 1 || m > kMaxM)
    throw UsageError("m must lie in 1.." + std::to_string(kMaxM));
  if (n < 2)
    throw UsageError("n must be an integer >= 2");
  Rational r;
  try {
    r = parse_rational(r_text);
  } catch (const std::exception &) {
    throw UsageError("r must be a rational p/q, got '" + r_text + "'");
  }
  if (r <= 0 || r >= 1)
    throw UsageError("r must lie strictly between 0 and 1");
  if (digits)
    require_digits(*digits);

  const Rational exact = modified_energy_closed(m, n, r);
  doc["m"] = m;
  doc["n"] = n;
  doc["r"] = to_string(r);
  doc["exact"] = to_string(exact);
  doc["decimal"] = to_decimal(exact, digits ? static_cast<int>(*digits)
                                            : kDecimalDigits);
  if (!digits)
    return kExitOk;
  const auto direct = modified_energy_direct(Rational(2 * m), n, r, *digits);
  return numeric_check(doc, exact, direct, *digits) ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string &suite, const VerifyOptions &opt, Json &doc,
               std::ostream &err) {
  if (opt.max_m < 1 || opt.max_m > kMaxM)
    throw UsageError("max-m must lie in 1.." + std::to_string(kMaxM));
  if (opt.digits <= kGuardDigits || opt.digits > 2000)
    throw UsageError("digits must lie in " + std::to_string(kGuardDigits + 1) +
                     "..2000");
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, opt);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }

  Json checks = Json::array();
  long failed = 0;
  for (const CheckResult &c : results) {
    Json item = {{"suite", c.suite}, {"id", c.id}, {"passed", c.passed}};
    if (!c.detail.empty())
      item[c.passed ? "note" : "witness"] = c.detail;
    checks.push_back(std::move(item));
    if (!c.passed) {
      ++failed;
      err << "FAIL " << c.suite << " / " << c.id << ": " << c.detail << "\n";
    }
  }
  doc["suite"] = suite;
  doc["max_m"] = opt.max_m;
  doc["digits"] = opt.digits;
  doc["seed"] = opt.seed;
  doc["passed"] = failed == 0;
  doc["checks"] = checks;
  err << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Exact Riesz energies of the roots of unity", "riesz"};
  app.require_subcommand(1);

  long s = 0, n = 0, m = 0;
  std::optional<long> digits;
  std::string method = "ledger", r_text, suite;
  VerifyOptions vopt;

  auto *energy = app.add_subcommand("energy", "L_s(N) for even s");
  energy->add_option("--s", s, "even nonzero exponent")->required();
  energy->add_option("--n", n, "number of points, >= 2")->required();
  energy->add_option("--numeric-digits", digits,
                     "cross-check against a certified direct sum");

  auto *coeffs = app.add_subcommand("coeffs", "beta_nu(m) table");
  coeffs->add_option("--m", m, "1..8")->required();
  coeffs->add_option("--method", method, "source of the printed table")
      ->check(CLI::IsMember({"ledger", "bernoulli", "expansion"}));

  auto *modified = app.add_subcommand("modified", "M_{2m}(N; r)");
  modified->add_option("--m", m, "half the exponent")->required();
  modified->add_option("--n", n, "number of points, >= 2")->required();
  modified->add_option("--r", r_text, "rational p/q in (0, 1)")->required();
  modified->add_option("--numeric-digits", digits,
                       "cross-check against a certified direct sum");

  auto *verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"all", "prop1", "prop2", "prop3", "prop4",
                             "appendix", "oracle"}));
  verify->add_option("--max-m", vopt.max_m, "largest m checked");
  verify->add_option("--digits", vopt.digits, "oracle precision");
  verify->add_option("--seed", vopt.seed, "seed for randomized samples");

  Json doc;
  auto usage = [&](const std::string &msg) {
    doc = Json{{"error", msg}};
    out << doc.dump(2) << "\n";
    err << "riesz: " << msg << "\n";
    return static_cast<int>(kExitUsage);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    return usage(e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (energy->parsed())
      code = cmd_energy(s, n, digits, doc);
    else if (coeffs->parsed())
      code = cmd_coeffs(m, method, doc);
    else if (modified->parsed())
      code = cmd_modified(m, n, r_text, digits, doc);
    else
      code = cmd_verify(suite, vopt, doc, err);
  } catch (const UsageError &e) {
    return usage(e.what());
  } catch (const Error &e) {
    // an oracle that cannot certify its result counts as a mismatch
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "riesz: " << e.what() << "\n";
    return kExitMismatch;
  }
  out << doc.dump(2) << "\n";
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  err << app.get_subcommands().front()->get_name() << " finished in " << secs
      << " s (exit " << code << ")\n";
  return code;
}

} // namespace riesz
