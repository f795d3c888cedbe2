#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "midloc/rational.hpp"

namespace midloc {

/// An element a + b/e of Q + Q(1/e), where e is Napier's constant.
///
/// Because e is transcendental the pair (a, b) is unique, so equality is
/// componentwise. Ordering is decided exactly by bracketing e between
/// rational partial sums of its series until the sign of a*e + b is settled;
/// this always terminates because a*e + b != 0 unless a = b = 0.
class EExtNumber {
 public:
  EExtNumber() = default;
  EExtNumber(Rational rat, Rational ecoef) : rat_(std::move(rat)), ecoef_(std::move(ecoef)) {}
  EExtNumber(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  EExtNumber(T value) : rat_(value) {}  // NOLINT(google-explicit-constructor)

  /// The number 1/e.
  static EExtNumber inverse_e() { return EExtNumber(Rational(0), Rational(1)); }

  /// Accepts "a+b/e", "a-b/e", "b/e" and plain rational literals, where a and
  /// b are anything Rational::parse accepts ("-2+0/e", "4+-6/e", "1/2+3/e").
  static EExtNumber parse(std::string_view text);

  const Rational& rat() const { return rat_; }
  const Rational& ecoef() const { return ecoef_; }

  int sign() const;
  bool is_zero() const { return rat_.is_zero() && ecoef_.is_zero(); }

  /// "a+b/e" with both parts canonical, e.g. "4+-6/e".
  std::string to_string() const;
  double to_double() const;

  EExtNumber operator-() const { return {-rat_, -ecoef_}; }
  EExtNumber& operator+=(const EExtNumber& rhs);
  EExtNumber& operator-=(const EExtNumber& rhs);
  EExtNumber& operator*=(const Rational& scale);
  EExtNumber& operator/=(const Rational& scale);

  friend EExtNumber operator+(EExtNumber lhs, const EExtNumber& rhs) { return lhs += rhs; }
  friend EExtNumber operator-(EExtNumber lhs, const EExtNumber& rhs) { return lhs -= rhs; }
  friend EExtNumber operator*(EExtNumber lhs, const Rational& rhs) { return lhs *= rhs; }
  friend EExtNumber operator*(const Rational& lhs, EExtNumber rhs) { return rhs *= lhs; }
  friend EExtNumber operator/(EExtNumber lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const EExtNumber& lhs, const EExtNumber& rhs) {
    return lhs.rat_ == rhs.rat_ && lhs.ecoef_ == rhs.ecoef_;
  }
  friend std::strong_ordering operator<=>(const EExtNumber& lhs, const EExtNumber& rhs) {
    return (lhs - rhs).sign() <=> 0;
  }

 private:
  Rational rat_;
  Rational ecoef_;
};

std::ostream& operator<<(std::ostream& os, const EExtNumber& value);

/// Within Q + Q(1/e) a value is algebraic iff its 1/e coefficient vanishes.
bool eext_is_algebraic(const EExtNumber& v);

/// k when v = k/e for an integer k >= 0, otherwise nullopt.
std::optional<BigInt> eext_as_k_over_e(const EExtNumber& v);

/// The unique k >= 1 with d + k/e algebraic, i.e. k = -ecoef(d) when that is
/// a positive integer.
std::optional<BigInt> eext_algebraic_shift(const EExtNumber& d);

/// Rational bracket lo < e < hi from the first `terms` terms of sum 1/n!.
/// Exposed for tests.
struct EBracket {
  Rational lo;
  Rational hi;
};
EBracket e_bracket(unsigned terms);

}  // namespace midloc
