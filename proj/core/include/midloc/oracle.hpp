#pragma once

#include <optional>
#include <string>
#include <variant>

#include "midloc/errors.hpp"

namespace midloc {

enum class Side { left, right };

inline const char* side_name(Side side) { return side == Side::left ? "L" : "R"; }

/// Halting observation: the walker stands on the midpoint (or, in the
/// convergence problem, within the quit radius).
struct Quit {
  friend bool operator==(Quit, Quit) { return true; }
};

/// Nearest end and the distance to it, 0 <= distance < D.
template <class Num>
struct Seen {
  Side side;
  Num distance;

  friend bool operator==(const Seen&, const Seen&) = default;
};

/// Everything a transition map is allowed to read.
template <class Num>
using Observation = std::variant<Quit, Seen<Num>>;

template <class Num>
bool is_quit(const Observation<Num>& obs) {
  return std::holds_alternative<Quit>(obs);
}

/// A segment [-D, D] and a walker position on it. `quit_radius` is only set
/// for the convergence problem.
template <class Num>
struct Instance {
  Num half_length;
  Num position;
  std::optional<Num> quit_radius;
};

template <class Num>
void validate(const Instance<Num>& inst) {
  if (!(inst.half_length > Num(1))) throw InvalidInstance("half-length D must exceed 1");
  if (inst.position < -inst.half_length || inst.position > inst.half_length) {
    throw InvalidInstance("position outside [-D, D]");
  }
  if (inst.quit_radius) {
    const Num& eps = *inst.quit_radius;
    if (!(eps > Num(0)) || eps > inst.half_length) {
      throw InvalidInstance("quit radius must lie in (0, D]");
    }
  }
}

/// Exact observation: (R, D - x) for x > 0, (L, D + x) for x < 0, Quit at 0.
/// Any quit radius on the instance is ignored.
template <class Num>
Observation<Num> observe(const Instance<Num>& inst) {
  validate(inst);
  const Num& x = inst.position;
  if (x > Num(0)) return Seen<Num>{Side::right, inst.half_length - x};
  if (x < Num(0)) return Seen<Num>{Side::left, inst.half_length + x};
  return Quit{};
}

/// Convergence observation: Quit on the closed band [-eps, eps].
template <class Num>
Observation<Num> observe_eps(const Instance<Num>& inst) {
  if (!inst.quit_radius) throw InvalidInstance("convergence observation needs a quit radius");
  validate(inst);
  const Num& x = inst.position;
  const Num& eps = *inst.quit_radius;
  if (x > eps) return Seen<Num>{Side::right, inst.half_length - x};
  if (x < -eps) return Seen<Num>{Side::left, inst.half_length + x};
  return Quit{};
}

}  // namespace midloc
