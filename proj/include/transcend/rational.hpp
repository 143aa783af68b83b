// Exact rational arithmetic: a thin value-semantic wrapper around
// boost::multiprecision::cpp_rational that adds the conversions the rest of
// the library needs (decimal literals, "p/q" strings, exact integer powers).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "transcend/errors.hpp"

namespace transcend {

using Int = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  explicit Rational(const Int& n) : v_(n) {}
  Rational(Int num, Int den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    // cpp_rational reduces to gcd 1 but insists on a positive denominator.
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = BigRat(std::move(num), std::move(den));
  }

  // "123", "2.5", "0.125" -> exact value. Signs are handled by the caller
  // (the grammar produces them via unary minus).
  static Rational from_decimal(std::string_view text);
  // "p/q" or "p" (optionally signed) -> exact value; inverse of
  // fraction_string() and of to_string().
  static Rational from_fraction(std::string_view text);

  const BigRat& value() const { return v_; }
  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return v_ < 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  // Exact integer power; negative exponents invert (zero base throws).
  Rational pow(long long e) const;

  Rational abs() const { return v_ < 0 ? Rational(BigRat(-v_)) : *this; }

  double to_double() const { return v_.convert_to<double>(); }

  // "5", "-3/4": reduced, denominator omitted when 1.
  std::string to_string() const;
  // Always "p/q" ("5/1", "-3/4"): the serialization form.
  std::string fraction_string() const;
  // Finite decimal form ("2.5") when the denominator is 2^a * 5^b,
  // std::nullopt otherwise.
  std::optional<std::string> decimal_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(BigRat(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  BigRat v_;
};

}  // namespace transcend
