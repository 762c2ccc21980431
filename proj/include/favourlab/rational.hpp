#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace favourlab {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "n", "-n" or "n/d".
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  /// Smallest integer not below this value.
  Integer ceil() const;

  /// Presentation only; never used for verdicts.
  double to_double() const { return value_.convert_to<double>(); }

  /// "n/d", or "n" when the denominator is 1.
  std::string to_string() const;

  /// Decimal rendering with 15 significant digits.
  std::string to_decimal() const;

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.value_ + y.value_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.value_ - y.value_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.value_ * y.value_); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& y) { value_ += y.value_; return *this; }
  Rational& operator-=(const Rational& y) { value_ -= y.value_; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    if (x.value_ < y.value_) return std::strong_ordering::less;
    if (x.value_ > y.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  Value value_;
};

}  // namespace favourlab
