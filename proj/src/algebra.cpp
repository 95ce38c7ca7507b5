#include "riesz/algebra.hpp"

#include <charconv>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer factorial(long n) {
  if (n < 0)
    throw std::invalid_argument("factorial of a negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer ipow(const Integer &base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational ipow(const Rational &base, long exponent) {
  if (exponent >= 0) {
    Integer num = ipow(base.get_num(), static_cast<unsigned long>(exponent));
    Integer den = ipow(base.get_den(), static_cast<unsigned long>(exponent));
    return make_rational(num, den);
  }
  if (base == 0)
    throw std::domain_error("zero to a negative power");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

bool is_integer(const Rational &x) { return x.get_den() == 1; }

std::string to_string(const Rational &x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty())
      throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw std::invalid_argument("missing digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("not an integer: " + std::string(s));
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("denominator must be unsigned");
  Integer den = parse_int(den_text);
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_decimal(const Rational &x, int digits) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Integer num = abs(x.get_num()) * scale;
  Integer den = x.get_den();
  // round half away from zero
  Integer q = (2 * num + den) / (2 * den);
  std::string s = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits)
      s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (x < 0 && q != 0)
    s.insert(0, "-");
  return s;
}

// PiValue

PiValue::PiValue(const Rational &constant) { add_term(0, constant); }

PiValue PiValue::monomial(const Rational &c, int exponent) {
  if (exponent < 0 || exponent % 2 != 0)
    throw OddPiExponent("pi exponent must be even and non-negative, got " +
                        std::to_string(exponent));
  PiValue v;
  v.add_term(exponent, c);
  return v;
}

void PiValue::add_term(int exponent, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational PiValue::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool PiValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiValue::to_rational() const {
  if (!is_rational())
    throw PiResidue("pi powers survive in " + to_string());
  return coefficient(0);
}

PiValue PiValue::divided_by_pi_power(int exponent) const {
  if (exponent % 2 != 0)
    throw OddPiExponent("odd pi exponent " + std::to_string(exponent));
  PiValue out;
  for (const auto &[e, c] : terms_) {
    if (e < exponent)
      throw PiResidue("cannot divide " + to_string() + " by pi^" +
                      std::to_string(exponent));
    out.add_term(e - exponent, c);
  }
  return out;
}

PiValue &PiValue::operator+=(const PiValue &other) {
  for (const auto &[e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

PiValue &PiValue::operator-=(const PiValue &other) {
  for (const auto &[e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

PiValue &PiValue::operator*=(const Rational &scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= scale;
  return *this;
}

PiValue operator*(const PiValue &a, const PiValue &b) {
  PiValue out;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term(ea + eb, ca * cb);
  return out;
}

std::string PiValue::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto &[e, c] : terms_) {
    if (!s.empty())
      s += " + ";
    s += "(" + riesz::to_string(c) + ")";
    if (e > 0)
      s += "*pi^" + std::to_string(e);
  }
  return s;
}

} // namespace riesz
