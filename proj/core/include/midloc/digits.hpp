#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "midloc/rational.hpp"

namespace midloc {

using Digit = std::uint8_t;

/// Eventually periodic expansion 0.p_1 p_2 ... p_P (q_1 ... q_Q)(q_1 ... q_Q)...
/// of a value in [0, 1] in base 2 or 3.
///
/// The decoder `expand` yields the canonical form: minimal preperiod and
/// period, terminating values stored with period {0}, and never an
/// all-(base-1) tail. Other producers (binary_map_form, cantor_digits) may
/// hold a repeating (base-1) tail where their convention asks for it.
struct DigitExpansion {
  int base = 2;
  std::vector<Digit> preperiod;
  std::vector<Digit> period{0};

  /// Digit at 1-based position i after the radix point.
  Digit digit(std::size_t i) const;
  bool terminates() const { return period.size() == 1 && period.front() == 0; }

  /// Positional text such as "0.01(0)" or "0.(0110)".
  std::string to_string() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// Longest preperiod plus period any expansion may reach before
/// ResourceLimit is thrown.
constexpr std::size_t max_expansion_digits() { return std::size_t{1} << 16; }

/// Canonical expansion of x in [0, 1). Throws std::invalid_argument outside
/// that range or for a base other than 2 or 3, and ResourceLimit when the
/// expansion is longer than max_expansion_digits().
DigitExpansion expand(const Rational& x, int base);

/// Exact value denoted by an expansion.
Rational evaluate(const DigitExpansion& expansion);

/// Shortest period, then shortest preperiod, for the same digit stream.
DigitExpansion normalized(DigitExpansion expansion);

/// Binary expansion of x in [0, 1/2] under the convention used by the
/// Cantor maps: dyadic x <= 1/4 terminate, dyadic x > 1/4 (including 1/2)
/// end in repeating ones. The first digit is always 0.
DigitExpansion binary_map_form(const Rational& x);

/// The expansion of x in [0, 1) with every ternary digit in {0, 2}, if one
/// exists. A terminating "...1" is rewritten to "...0(2)".
std::optional<DigitExpansion> cantor_digits(const Rational& x);

/// Whether the fractional part of x lies in the middle-thirds Cantor set.
bool is_cantor(const Rational& x);

}  // namespace midloc
