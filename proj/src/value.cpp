#include "wellscmp/value.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace wellscmp {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

const Rat& Value::rat() const {
  if (!exact()) throw std::logic_error("rat() on a float value");
  return std::get<Rat>(v_);
}

double Value::as_double() const {
  if (!exact()) return std::get<double>(v_);
  const Rat& q = std::get<Rat>(v_);
  // mpq_get_d truncates toward zero; nudge to the nearest double
  double d = q.get_d();
  if (!std::isfinite(d) || Rat(d) == q) return d;
  double up = std::nextafter(d, q < 0 ? -HUGE_VAL : HUGE_VAL);
  Rat mid = (Rat(d) + Rat(up)) / 2;
  bool past_mid = q < 0 ? q < mid : q > mid;
  return past_mid ? up : d;
}

int Value::sign() const {
  if (exact()) return sgn(std::get<Rat>(v_));
  double d = std::get<double>(v_);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

Value Value::abs() const {
  return sign() < 0 ? -*this : *this;
}

Value Value::pow(unsigned long e) const {
  if (exact()) return Value(rat_pow(rat(), e));
  return Value(std::pow(as_double(), static_cast<double>(e)));
}

Value Value::operator-() const {
  if (exact()) return Value(Rat(-rat()));
  return Value(-as_double());
}

Value& Value::operator+=(const Value& o) {
  if (exact() && o.exact()) std::get<Rat>(v_) += o.rat();
  else v_ = as_double() + o.as_double();
  return *this;
}

Value& Value::operator-=(const Value& o) {
  if (exact() && o.exact()) std::get<Rat>(v_) -= o.rat();
  else v_ = as_double() - o.as_double();
  return *this;
}

Value& Value::operator*=(const Value& o) {
  if (exact() && o.exact()) std::get<Rat>(v_) *= o.rat();
  else v_ = as_double() * o.as_double();
  return *this;
}

Value& Value::operator/=(const Value& o) {
  if (o.sign() == 0 && (exact() && o.exact())) throw std::domain_error("division by zero");
  if (exact() && o.exact()) std::get<Rat>(v_) /= o.rat();
  else v_ = as_double() / o.as_double();
  return *this;
}

int Value::compare(const Value& o) const {
  if (exact() && o.exact()) return cmp(rat(), o.rat());
  double a = as_double(), b = o.as_double();
  return a < b ? -1 : a > b ? 1 : 0;
}

std::string format_double(double d) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, d);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == d) break;
  }
  return buf;
}

std::string Value::str() const {
  if (!exact()) return format_double(as_double());
  const Rat& q = rat();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// digits[.digits][e[+-]digits] with optional leading sign, as an exact rational
Rat parse_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!all_digits(es)) throw std::invalid_argument("bad exponent in '" + text + "'");
    exp10 = std::stol(es);
    if (eneg) exp10 = -exp10;
  }
  std::string digits = s;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exp10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("cannot parse number '" + text + "'");
  BigInt num(digits, 10);
  if (neg) num = -num;
  BigInt den = 1;
  if (exp10 >= 0) num *= int_pow(BigInt(10), static_cast<unsigned long>(exp10));
  else den = int_pow(BigInt(10), static_cast<unsigned long>(-exp10));
  return make_rat(num, den);
}

}  // namespace

Value Value::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat num = parse_decimal(text.substr(0, slash));
    Rat den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in '" + text + "'");
    return Value(Rat(num / den));
  }
  return Value(parse_decimal(text));
}

}  // namespace wellscmp
