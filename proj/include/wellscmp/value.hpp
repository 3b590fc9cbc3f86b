#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace wellscmp {

using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(const BigInt& num, const BigInt& den);
Rat rat_pow(const Rat& base, unsigned long e);
BigInt int_pow(const BigInt& base, unsigned long e);
BigInt binomial(unsigned long n, unsigned long k);

/// Scalar that is an exact rational for as long as every input was exact,
/// and silently degrades to double once any float operand enters.
class Value {
 public:
  Value() : v_(Rat(0)) {}
  Value(int n) : v_(Rat(n)) {}
  Value(long n) : v_(Rat(static_cast<signed long>(n))) {}
  Value(const BigInt& n) : v_(Rat(n)) {}
  Value(const Rat& q) : v_(q) { std::get<Rat>(v_).canonicalize(); }
  explicit Value(double d) : v_(d) {}

  bool exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const;
  double as_double() const;
  Value to_float() const { return Value(as_double()); }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Value abs() const;
  Value pow(unsigned long e) const;

  Value operator-() const;
  Value& operator+=(const Value& o);
  Value& operator-=(const Value& o);
  Value& operator*=(const Value& o);
  Value& operator/=(const Value& o);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }

  /// Exact comparison when both sides are exact, double comparison otherwise.
  int compare(const Value& o) const;
  friend bool operator==(const Value& a, const Value& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return a.compare(b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return a.compare(b) >= 0; }

  /// "p/q" (or "p" when q == 1) for exact values, shortest round-trip
  /// decimal for floats.
  std::string str() const;

  /// Accepts "p/q", integer, decimal, and scientific forms. All of them
  /// parse to exact rationals ("0.05" -> 1/20); use Value(double) to force
  /// a float.
  static Value parse(const std::string& text);

 private:
  std::variant<Rat, double> v_;
};

std::string format_double(double d);

}  // namespace wellscmp
