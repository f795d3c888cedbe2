#include "midloc/strategies.hpp"

#include <stdexcept>
#include <string>

#include "midloc/cantor_maps.hpp"
#include "midloc/digits.hpp"
#include "midloc/primes.hpp"

namespace midloc {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const Rational kHalf(1, 2);

// Distance to the nearest integer on one side, for the eps/4 bands around
// the integers: below an integer (ceil side) or above one (floor side).
struct Band {
  bool below;          // d sits just below ceil(d)
  BigInt anchor;       // ceil(d) or floor(d)
  Rational offset;     // |d - anchor|, in (0, eps/4)
};

std::optional<Band> near_integer_band(const Rational& d, const Rational& eps) {
  if (d.is_integer() || d.sign() <= 0) return std::nullopt;
  const Rational width = eps / 4;
  const Rational below = Rational(d.ceil()) - d;
  if (below < width) return Band{true, d.ceil(), below};
  const Rational above = d.frac();
  if (above < width) return Band{false, d.floor(), above};
  return std::nullopt;
}

}  // namespace

std::string_view kind_name(const StrategyKind& kind) {
  return std::visit(overloaded{
                        [](const strategy::Converge&) { return std::string_view("converge"); },
                        [](const strategy::Algebraic&) { return std::string_view("algebraic"); },
                        [](const strategy::EpsOmit&) { return std::string_view("epsomit"); },
                        [](const strategy::OneBit&) { return std::string_view("onebit"); },
                        [](const strategy::NonCantor&) { return std::string_view("noncantor"); },
                    },
                    kind);
}

StrategyKind kind_from_name(std::string_view name, const std::optional<Rational>& eps) {
  if (name == "converge") return strategy::Converge{};
  if (name == "algebraic") return strategy::Algebraic{};
  if (name == "onebit") return strategy::OneBit{};
  if (name == "noncantor") return strategy::NonCantor{};
  if (name == "epsomit") {
    if (!eps) throw std::invalid_argument("epsomit needs an eps parameter");
    if (eps->sign() <= 0 || *eps >= kHalf) throw std::invalid_argument("epsomit needs 0 < eps < 1/2");
    return strategy::EpsOmit{*eps};
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

Rational converge_step(const Observation<Rational>& obs) {
  const auto* seen = std::get_if<Seen<Rational>>(&obs);
  if (!seen) return 0;
  const Rational& d = seen->distance;
  if (seen->side == Side::right) return -1;
  if (auto k = delta_class(d)) {
    return Rational(1L, static_cast<long>(nth_prime(*k + 1)));
  }
  return -d;
}

EExtNumber algebraic_step(const Observation<EExtNumber>& obs) {
  const auto* seen = std::get_if<Seen<EExtNumber>>(&obs);
  if (!seen) return 0;
  const EExtNumber& d = seen->distance;
  if (seen->side == Side::left) {
    if (eext_as_k_over_e(d)) return EExtNumber::inverse_e();
    return -d;
  }
  if (auto k = eext_algebraic_shift(d)) {
    EExtNumber move = (EExtNumber(Rational(0), Rational(*k)) - d) / 2;
    if (move.sign() > 0 && move < d) return -move;
  }
  return -d;
}

Rational eps_omit_step(const Observation<Rational>& obs, const Rational& eps) {
  if (eps.sign() <= 0 || eps >= kHalf) throw std::invalid_argument("eps_omit_step needs 0 < eps < 1/2");
  const auto* seen = std::get_if<Seen<Rational>>(&obs);
  if (!seen) return 0;
  const Rational& d = seen->distance;

  if (seen->side == Side::right) {
    if (d.is_integer()) return -kHalf;
    const Rational nudge = eps / 2 * (d.frac() / 2);
    return is_odd(d.floor()) ? Rational(-1) + nudge : Rational(-1) - nudge;
  }

  if (d.is_integer()) return 1;
  if (auto band = near_integer_band(d, eps)) {
    const Rational scaled = 2 / eps * band->offset;
    const bool even = !is_odd(band->anchor);
    const bool fits_low = scaled <= kHalf - eps;
    const bool fits_high = scaled >= eps;
    const Rational back = band->below ? band->offset : -band->offset;
    if (band->below) {
      if (even && fits_low) return back + scaled + kHalf;
      if (!even && fits_high) return back + scaled;
    } else {
      if (even && fits_high) return back + scaled;
      if (!even && fits_low) return back + scaled + kHalf;
    }
  }
  return -d.frac();
}

OneBitMove onebit_step(const Observation<Rational>& obs, MemoryBit bit) {
  const auto* seen = std::get_if<Seen<Rational>>(&obs);
  if (!seen) return {0, bit};
  const Rational& d = seen->distance;
  if (seen->side == Side::left) {
    if (d.is_integer()) return {1, MemoryBit(is_odd(d.floor()) ? 0 : 1)};
    return {-d.frac(), MemoryBit(is_odd(d.floor()) ? 1 : 0)};
  }
  const Rational half_frac = d.frac() / 2;
  if (bit.matches_parity(d.floor())) return {Rational(-1) + half_frac, bit.flipped()};
  return {-kHalf + half_frac, bit.flipped()};
}

Rational noncantor_step(const Observation<Rational>& obs) {
  const auto* seen = std::get_if<Seen<Rational>>(&obs);
  if (!seen) return 0;
  const Rational& d = seen->distance;
  const bool floor_odd = is_odd(d.floor());

  if (seen->side == Side::right) {
    if (d.is_integer()) return -kHalf;
    const Rational half_frac = d.frac() / 2;
    return Rational(-1) + h_map(half_frac, floor_odd ? HFlavor::odd : HFlavor::even);
  }

  if (d.is_integer()) return 1;
  const Rational frac = d.frac();
  // At most one flavor can match since the two images are disjoint.
  for (HFlavor flavor : {HFlavor::even, HFlavor::odd}) {
    auto source = h_inverse(frac, flavor);
    if (!source || is_cantor(*source)) continue;
    // Even flavor takes the half step on an even floor, odd flavor on an odd one.
    const bool half_step = (flavor == HFlavor::even) != floor_odd;
    return -frac + *source + (half_step ? kHalf : Rational(0));
  }
  return -frac;
}

}  // namespace midloc
