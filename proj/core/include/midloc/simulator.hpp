#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "midloc/eext.hpp"
#include "midloc/oracle.hpp"
#include "midloc/rational.hpp"
#include "midloc/strategies.hpp"

namespace midloc {

/// One observe-then-move step. `bit` is the memory bit read at this step
/// (one-bit strategy only); `displacement` is 0 on the closing Quit entry.
template <class Num>
struct TraceStep {
  std::size_t t = 0;
  Num position;
  Observation<Num> observation;
  std::optional<MemoryBit> bit;
  Num displacement;
};

/// The observation at step `steps` was Quit, and none before it.
struct Halted {
  std::size_t steps = 0;
  friend bool operator==(Halted, Halted) = default;
};

/// `cap` moves were made without reaching Quit.
struct StepLimitReached {
  std::size_t cap = 0;
  friend bool operator==(StepLimitReached, StepLimitReached) = default;
};

using Outcome = std::variant<Halted, StepLimitReached>;

template <class Num>
struct Trace {
  StrategyKind kind;
  Instance<Num> instance;
  std::optional<MemoryBit> initial_bit;
  std::vector<TraceStep<Num>> steps;
  Outcome outcome;
  /// Position after the last move (equal to the Quit position when halted).
  Num final_position;
  std::size_t max_steps = 0;

  bool halted() const { return std::holds_alternative<Halted>(outcome); }
};

struct RunOptions {
  std::size_t max_steps = 10'000;
  /// Starting bit for the one-bit strategy; ignored by the others.
  MemoryBit initial_bit{0};
};

/// Iterates observe -> step -> move until Quit or `max_steps` moves.
///
/// Throws RepresentationMismatch when the strategy needs the other number
/// type, InvalidInstance for an instance outside the domain (including a
/// missing or spurious quit radius), and InvariantViolation if a move would
/// leave [-D, D].
Trace<Rational> run(const StrategyKind& kind, const Instance<Rational>& inst,
                    const RunOptions& options = {});
Trace<EExtNumber> run(const StrategyKind& kind, const Instance<EExtNumber>& inst,
                      const RunOptions& options = {});

struct Timeout {
  std::size_t cap = 0;
  friend bool operator==(Timeout, Timeout) = default;
};

/// Number of moves to reach Quit, or Timeout at the cap. Zero iff the
/// starting observation is already Quit.
using PsiResult = std::variant<std::size_t, Timeout>;

PsiResult psi(const StrategyKind& kind, const Instance<Rational>& inst,
              const RunOptions& options = {});
PsiResult psi(const StrategyKind& kind, const Instance<EExtNumber>& inst,
              const RunOptions& options = {});

/// A start position expressed relative to D: x0 = scale * D + offset. Lets one
/// grid say "-D" or "D/2" across many half-lengths.
template <class Num>
struct StartPoint {
  Rational scale;
  Num offset;

  Num resolve(const Num& half_length) const { return half_length * scale + offset; }
};

template <class Num>
StartPoint<Num> absolute_start(Num x) {
  return {Rational(0), std::move(x)};
}

template <class Num>
struct SweepOptions {
  std::size_t max_steps = 10'000;
  std::optional<Num> quit_radius;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

template <class Num>
struct SweepRow {
  Num half_length;
  Num start;
  std::optional<MemoryBit> initial_bit;
  /// Psi, or the message of the error that row raised.
  std::variant<std::size_t, Timeout, std::string> result;
};

/// One row per (D, x0) pair in input order; the one-bit strategy expands
/// each pair over b0 = 0, 1. Rows are independent: an invalid row records its
/// error and the sweep continues.
std::vector<SweepRow<Rational>> sweep(const StrategyKind& kind,
                                      const std::vector<Rational>& half_lengths,
                                      const std::vector<StartPoint<Rational>>& starts,
                                      const SweepOptions<Rational>& options = {});
std::vector<SweepRow<EExtNumber>> sweep(const StrategyKind& kind,
                                        const std::vector<EExtNumber>& half_lengths,
                                        const std::vector<StartPoint<EExtNumber>>& starts,
                                        const SweepOptions<EExtNumber>& options = {});

}  // namespace midloc
