#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace midloc {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Backed by GMP's mpq_t. Construction from integers is implicit so that
/// expressions such as `d - 1` or `Rational(1, 2) + x` read naturally.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      mpq_set_si(value_.get_mpq_t(), static_cast<long>(value), 1);
    } else {
      mpq_set_ui(value_.get_mpq_t(), static_cast<unsigned long>(value), 1);
    }
  }
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(long numerator, long denominator);

  /// Parses "p/q", a signed integer, or a finite decimal such as "-4.1"
  /// (read exactly, 41/10). Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  /// x - floor(x), in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const;

  /// Canonical "p/q" text; integers print without a denominator.
  std::string to_string() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// True when n is odd; works for negative n.
inline bool is_odd(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace midloc
