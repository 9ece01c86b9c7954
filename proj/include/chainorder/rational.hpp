#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chainorder {

/// Exact rational number in canonical reduced form (denominator > 0).
///
/// Backed by GMP so that the denominators 2^(n+1) produced by deep tent-map
/// preimages never overflow.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}                     // NOLINT
  Rational(int value) : value_(static_cast<long>(value)) {}   // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  /// Exact value of a finite double.
  static Rational from_double(double value);
  /// 2^exponent for any integer exponent.
  static Rational power_of_two(long exponent);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Always "p/q", including "p/1" for integers.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  mpz_class floor() const;
  mpz_class ceil() const;

  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace chainorder
