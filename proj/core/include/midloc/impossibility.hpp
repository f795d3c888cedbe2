#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "midloc/eext.hpp"
#include "midloc/oracle.hpp"
#include "midloc/rational.hpp"

namespace midloc {

/// An oblivious transition map given by its displacement per observation.
template <class Num>
struct MotionMap {
  std::string name;
  std::function<Num(const Observation<Num>&)> motion;
};

/// A map the caller declares symmetric: motion(L, d) = -motion(R, d).
using SymmetricMap = MotionMap<Rational>;

/// True iff motion(L, d) == -motion(R, d) for every sample.
template <class Num>
bool check_symmetry(const MotionMap<Num>& map, const std::vector<Num>& samples) {
  for (const Num& d : samples) {
    const Num left = map.motion(Seen<Num>{Side::left, d});
    const Num right = map.motion(Seen<Num>{Side::right, d});
    if (!(left == -right)) return false;
  }
  return true;
}

/// The distances k*D/n for k = 0..n-1, all in [0, D).
std::vector<Rational> grid_samples(const Rational& half_length, std::size_t n);

/// Given a one-step witness (the map sends x_star straight to 0 on [-D, D]),
/// returns the instance (D - x_star/2, x_star/2) on which a symmetric map
/// bounces between x_star/2 and -x_star/2 forever.
///
/// Throws InvalidInstance if x_star is not in (0, D], if the map does not
/// move x_star by exactly -x_star, or if the shrunken half-length is <= 1.
Instance<Rational> build_counterexample(const SymmetricMap& map, const Rational& half_length,
                                        const Rational& x_star);

/// True iff `horizon` moves from inst alternate x, -x, x, ... exactly and
/// never observe Quit.
bool verify_two_cycle(const SymmetricMap& map, const Instance<Rational>& inst,
                      std::size_t horizon);

struct ShippedMap {
  SymmetricMap map;
  Rational witness_half_length;
  Rational witness_x_star;
};

/// Example symmetric maps, each with a valid one-step witness.
const std::vector<ShippedMap>& shipped_symmetric_maps();

/// Looks up a shipped map by name; throws std::invalid_argument if unknown.
const ShippedMap& shipped_symmetric_map(const std::string& name);

// The shipped strategies viewed as plain motion maps. The one-bit strategy is
// frozen at bit 0 and epsomit uses eps = 1/10.
MotionMap<Rational> converge_motion();
MotionMap<EExtNumber> algebraic_motion();
MotionMap<Rational> eps_omit_motion(const Rational& eps = Rational(1, 10));
MotionMap<Rational> onebit_motion();
MotionMap<Rational> noncantor_motion();

}  // namespace midloc
