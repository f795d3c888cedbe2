#include "midloc/cantor_maps.hpp"

#include <functional>
#include <stdexcept>

namespace midloc {
namespace {

// Lists an eventually periodic stream with preperiod at most `pre` and period
// dividing `per`, then normalizes it.
DigitExpansion tabulate(int base, std::size_t pre, std::size_t per,
                        const std::function<Digit(std::size_t)>& digit_at) {
  DigitExpansion e;
  e.base = base;
  e.preperiod.clear();
  e.period.clear();
  for (std::size_t i = 1; i <= pre; ++i) e.preperiod.push_back(digit_at(i));
  for (std::size_t i = pre + 1; i <= pre + per; ++i) e.period.push_back(digit_at(i));
  return normalized(std::move(e));
}

// Index of the binary digit carried by ternary position i, or 0 if position
// i carries a fixed digit. Even flavor uses positions 2j, odd uses 2j+1,
// both for j >= 2.
std::size_t carried_index(std::size_t i, HFlavor flavor) {
  std::size_t offset = flavor == HFlavor::even ? 0 : 1;
  if (i < 4 + offset || (i - offset) % 2 != 0) return 0;
  return (i - offset) / 2;
}

}  // namespace

DigitExpansion h_digits(const Rational& x, HFlavor flavor) {
  const DigitExpansion beta = binary_map_form(x);
  // Below 1/4 the free positions are 0; above, they are 2.
  const bool upper = x > Rational(1, 4);
  const Digit fill = upper ? 2 : 0;
  auto gamma = [&](std::size_t i) -> Digit {
    std::size_t j = carried_index(i, flavor);
    if (j == 0) return fill;
    return static_cast<Digit>(2 * beta.digit(j));
  };
  // beta_j is periodic for j > P, so gamma_i is periodic (with period 2|Q|)
  // once i > 2P + 1 and i is past the fixed positions 1..4.
  return tabulate(3, 2 * beta.preperiod.size() + 4, 2 * beta.period.size(), gamma);
}

Rational h_map(const Rational& x, HFlavor flavor) {
  if (x.sign() < 0 || x > Rational(1, 2)) throw std::invalid_argument("h_map needs 0 <= x <= 1/2");
  return cantor_map_scale() * evaluate(h_digits(x, flavor));
}

std::optional<Rational> h_inverse(const Rational& y, HFlavor flavor) {
  if (y.sign() <= 0 || y >= cantor_map_scale()) return std::nullopt;
  const auto gamma = cantor_digits(y / cantor_map_scale());
  if (!gamma) return std::nullopt;

  const Digit fill = gamma->digit(1);
  // Every non-carrying position must hold the fill digit. Positions repeat
  // with period |Q| and parity with period 2, so P + 2|Q| positions cover all.
  const std::size_t horizon = gamma->preperiod.size() + 2 * gamma->period.size();
  for (std::size_t i = 1; i <= horizon; ++i) {
    if (carried_index(i, flavor) == 0 && gamma->digit(i) != fill) return std::nullopt;
  }

  const std::size_t offset = flavor == HFlavor::even ? 0 : 1;
  auto beta = [&](std::size_t j) -> Digit {
    if (j == 1) return 0;
    return static_cast<Digit>(gamma->digit(2 * j + offset) / 2);
  };
  const DigitExpansion binary =
      tabulate(2, gamma->preperiod.size() / 2 + 2, gamma->period.size(), beta);
  const Rational x = evaluate(binary);
  if (x.sign() <= 0 || x >= Rational(1, 2)) return std::nullopt;
  // The recovered digits must also follow the binary convention for x;
  // checking the forward image settles that and the tail forms at once.
  if (h_map(x, flavor) != y) return std::nullopt;
  return x;
}

}  // namespace midloc
