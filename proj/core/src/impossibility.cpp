#include "midloc/impossibility.hpp"

#include <stdexcept>

#include "midloc/errors.hpp"
#include "midloc/strategies.hpp"

namespace midloc {
namespace {

Rational apply(const SymmetricMap& map, const Instance<Rational>& inst) {
  return inst.position + map.motion(observe(inst));
}

// Builds a symmetric map from its right-hand motion.
SymmetricMap mirrored(std::string name, std::function<Rational(const Rational&)> right) {
  return {std::move(name), [right = std::move(right)](const Observation<Rational>& obs) {
            const auto* seen = std::get_if<Seen<Rational>>(&obs);
            if (!seen) return Rational(0);
            const Rational r = right(seen->distance);
            return seen->side == Side::right ? r : -r;
          }};
}

}  // namespace

std::vector<Rational> grid_samples(const Rational& half_length, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(half_length * Rational(k) / Rational(n));
  return out;
}

Instance<Rational> build_counterexample(const SymmetricMap& map, const Rational& half_length,
                                        const Rational& x_star) {
  if (!(x_star > Rational(0)) || x_star > half_length) {
    throw InvalidInstance("witness x* must lie in (0, D]");
  }
  const Instance<Rational> witness{half_length, x_star, std::nullopt};
  if (!apply(map, witness).is_zero()) {
    throw InvalidInstance("map does not move x* to 0 in one step");
  }
  const Rational half = x_star / Rational(2);
  const Rational shrunk = half_length - half;
  if (!(shrunk > Rational(1))) throw InvalidInstance("D - x*/2 must exceed 1");
  return {shrunk, half, std::nullopt};
}

bool verify_two_cycle(const SymmetricMap& map, const Instance<Rational>& inst,
                      std::size_t horizon) {
  Instance<Rational> cur = inst;
  for (std::size_t t = 0; t < horizon; ++t) {
    const Observation<Rational> obs = observe(cur);
    if (is_quit(obs)) return false;
    const Rational next = cur.position + map.motion(obs);
    if (next != -cur.position) return false;
    cur.position = next;
  }
  return true;
}

const std::vector<ShippedMap>& shipped_symmetric_maps() {
  static const std::vector<ShippedMap> maps = {
      {mirrored("unit", [](const Rational&) { return Rational(-1); }), Rational(2), Rational(1)},
      {mirrored("assume-two",
                [](const Rational& d) {
                  if (d >= Rational(1) && d < Rational(2)) return -(Rational(2) - d);
                  return -(d / Rational(2));
                }),
       Rational(2), Rational(1)},
      {mirrored("third", [](const Rational& d) { return -(d / Rational(3)); }), Rational(4),
       Rational(1)},
  };
  return maps;
}

const ShippedMap& shipped_symmetric_map(const std::string& name) {
  for (const auto& m : shipped_symmetric_maps()) {
    if (m.map.name == name) return m;
  }
  throw std::invalid_argument("unknown symmetric map '" + name + "'");
}

MotionMap<Rational> converge_motion() {
  return {"converge", [](const Observation<Rational>& obs) { return converge_step(obs); }};
}

MotionMap<EExtNumber> algebraic_motion() {
  return {"algebraic", [](const Observation<EExtNumber>& obs) { return algebraic_step(obs); }};
}

MotionMap<Rational> eps_omit_motion(const Rational& eps) {
  return {"epsomit",
          [eps](const Observation<Rational>& obs) { return eps_omit_step(obs, eps); }};
}

MotionMap<Rational> onebit_motion() {
  return {"onebit", [](const Observation<Rational>& obs) {
            return onebit_step(obs, MemoryBit(0)).displacement;
          }};
}

MotionMap<Rational> noncantor_motion() {
  return {"noncantor", [](const Observation<Rational>& obs) { return noncantor_step(obs); }};
}

}  // namespace midloc
