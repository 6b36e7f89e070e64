#pragma once

// Exact rationals backed by GMP's mpq_class.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "cramer/errors.hpp"

namespace cramer {

using BigInt = mpz_class;

/// Arbitrary-precision reduced fraction. Denominator is always positive and
/// coprime to the numerator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const BigInt& value) : value_(value) {}

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw InvalidArgument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  /// Accepts "p" or "p/q" with optional sign on p (and on q, folded into p).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    const auto slash = text.find('/');
    const BigInt num = parse_integer(trim(text.substr(0, slash)));
    if (slash == std::string_view::npos) return Rational(num);
    const BigInt den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
  }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class& raw() const { return value_; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static BigInt parse_integer(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("expected an integer, got \"" + std::string(s) + "\"");
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("expected an integer, got \"" + std::string(s) + "\"");
    }
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return BigInt(text, 10);
  }

  mpq_class value_;
};

inline Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
inline Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
inline Rational rat_neg(const Rational& x) { return -x; }
/// Throws InvalidArgument when y is zero.
inline Rational rat_div(const Rational& x, const Rational& y) { return x / y; }

}  // namespace cramer
