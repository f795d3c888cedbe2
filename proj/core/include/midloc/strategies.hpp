#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "midloc/eext.hpp"
#include "midloc/oracle.hpp"
#include "midloc/rational.hpp"

namespace midloc {

/// The single bit of memory carried by the one-bit strategy.
class MemoryBit {
 public:
  constexpr MemoryBit() = default;
  constexpr explicit MemoryBit(int value) : value_(value & 1) {}

  constexpr int value() const { return value_; }
  constexpr MemoryBit flipped() const { return MemoryBit(1 - value_); }
  /// Whether b and n agree mod 2.
  bool matches_parity(const BigInt& n) const { return (value_ == 1) == is_odd(n); }

  friend constexpr bool operator==(MemoryBit, MemoryBit) = default;

 private:
  int value_ = 0;
};

namespace strategy {

/// Prime-reciprocal stepping; reaches the band [-eps, eps] for every D.
struct Converge {
  friend bool operator==(Converge, Converge) { return true; }
};
/// 1/e stepping; lands exactly on 0 for algebraic D (here: rational D).
struct Algebraic {
  friend bool operator==(Algebraic, Algebraic) { return true; }
};
/// Parity encoding tuned for D whose fractional part lies in [eps, 1 - eps].
struct EpsOmit {
  Rational eps;
  friend bool operator==(const EpsOmit&, const EpsOmit&) = default;
};
/// Parity encoding with one bit of memory; lands on 0 for every D.
struct OneBit {
  friend bool operator==(OneBit, OneBit) { return true; }
};
/// Cantor-map encoding; lands on 0 when frac(D) is outside the Cantor set.
struct NonCantor {
  friend bool operator==(NonCantor, NonCantor) { return true; }
};

}  // namespace strategy

using StrategyKind = std::variant<strategy::Converge, strategy::Algebraic, strategy::EpsOmit,
                                  strategy::OneBit, strategy::NonCantor>;

/// "converge", "algebraic", "epsomit", "onebit" or "noncantor".
std::string_view kind_name(const StrategyKind& kind);

/// Inverse of kind_name. `eps` is required for "epsomit" and ignored
/// otherwise. Throws std::invalid_argument for unknown names.
StrategyKind kind_from_name(std::string_view name, const std::optional<Rational>& eps = {});

/// True for the strategy that runs over Q + Q(1/e).
inline bool uses_eext(const StrategyKind& kind) {
  return std::holds_alternative<strategy::Algebraic>(kind);
}

// Each step returns the displacement for one observation; the next position
// is x + displacement. Quit always maps to 0.

/// L,d: +1/p_{k+1} when d is in primorial class k, else -d (to the left end).
/// R,d: -1.
Rational converge_step(const Observation<Rational>& obs);

/// L,d: +1/e when d = k/e, else -d. R,d: -(k/e - d)/2 when d + k/e is
/// algebraic for some k >= 1 and that move lies strictly inside (0, d), else -d.
EExtNumber algebraic_step(const Observation<EExtNumber>& obs);

/// Requires 0 < eps < 1/2; throws std::invalid_argument otherwise.
Rational eps_omit_step(const Observation<Rational>& obs, const Rational& eps);

struct OneBitMove {
  Rational displacement;
  MemoryBit bit;
};

OneBitMove onebit_step(const Observation<Rational>& obs, MemoryBit bit);

Rational noncantor_step(const Observation<Rational>& obs);

}  // namespace midloc
