#pragma once

#include <optional>

#include "midloc/digits.hpp"
#include "midloc/rational.hpp"

namespace midloc {

/// The two digit-interleaving maps from [0, 1/2] into the Cantor set scaled by
/// 1/9. `even` writes the binary digits of x at even ternary positions,
/// `odd` at odd ones, so their images over (0, 1/2) never meet.
enum class HFlavor { even, odd };

/// Scale of both images: h(1/2) == 1/9 for either flavor.
inline Rational cantor_map_scale() { return Rational(1, 9); }

/// h_flavor(x) for x in [0, 1/2], exact. Order preserving, h(x) <= x, and
/// h(0) == 0. Throws std::invalid_argument outside [0, 1/2].
Rational h_map(const Rational& x, HFlavor flavor);

/// The ternary digit stream gamma with h_flavor(x) = (1/9) * 0.gamma_1 gamma_2 ...
/// in base 3. Exposed for diagnostics and tests.
DigitExpansion h_digits(const Rational& x, HFlavor flavor);

/// The unique x in the open interval (0, 1/2) with h_flavor(x) == y, or
/// nullopt when y is not in that image.
std::optional<Rational> h_inverse(const Rational& y, HFlavor flavor);

}  // namespace midloc
