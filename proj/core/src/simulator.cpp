#include "midloc/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <type_traits>

namespace midloc {
namespace {

// One transition: displacement plus the bit to carry forward.
template <class Num>
struct Move {
  Num displacement;
  std::optional<MemoryBit> bit;
};

template <class Num>
Move<Num> apply_strategy(const StrategyKind& kind, const Observation<Num>& obs,
                         std::optional<MemoryBit> bit) {
  if constexpr (std::is_same_v<Num, EExtNumber>) {
    return {algebraic_step(obs), std::nullopt};
  } else {
    if (std::holds_alternative<strategy::Converge>(kind)) return {converge_step(obs), std::nullopt};
    if (const auto* eo = std::get_if<strategy::EpsOmit>(&kind)) {
      return {eps_omit_step(obs, eo->eps), std::nullopt};
    }
    if (std::holds_alternative<strategy::OneBit>(kind)) {
      auto [delta, next] = onebit_step(obs, *bit);
      return {std::move(delta), next};
    }
    return {noncantor_step(obs), std::nullopt};
  }
}

template <class Num>
void check_representation(const StrategyKind& kind) {
  constexpr bool eext = std::is_same_v<Num, EExtNumber>;
  if (uses_eext(kind) != eext) {
    throw RepresentationMismatch(std::string(kind_name(kind)) + " runs over " +
                                 (uses_eext(kind) ? "a+b/e numbers" : "rationals"));
  }
}

template <class Num>
Trace<Num> run_impl(const StrategyKind& kind, const Instance<Num>& inst, const RunOptions& options) {
  check_representation<Num>(kind);
  const bool converge = std::holds_alternative<strategy::Converge>(kind);
  if (converge && !inst.quit_radius) throw InvalidInstance("converge needs a quit radius");
  if (!converge && inst.quit_radius) throw InvalidInstance("quit radius only applies to converge");
  validate(inst);

  Trace<Num> trace{kind, inst, std::nullopt, {}, Halted{}, inst.position, options.max_steps};
  std::optional<MemoryBit> bit;
  if (std::holds_alternative<strategy::OneBit>(kind)) {
    bit = options.initial_bit;
    trace.initial_bit = bit;
  }

  Instance<Num> state = inst;
  for (std::size_t t = 0;; ++t) {
    Observation<Num> obs = converge ? observe_eps(state) : observe(state);
    if (is_quit(obs)) {
      trace.steps.push_back({t, state.position, obs, bit, Num(0)});
      trace.outcome = Halted{t};
      break;
    }
    if (t == options.max_steps) {
      trace.outcome = StepLimitReached{options.max_steps};
      break;
    }
    Move<Num> move = apply_strategy(kind, obs, bit);
    Num next = state.position + move.displacement;
    if (next < -state.half_length || next > state.half_length) {
      throw InvariantViolation(std::string(kind_name(kind)) + " left the segment at step " +
                               std::to_string(t));
    }
    trace.steps.push_back({t, state.position, std::move(obs), bit, move.displacement});
    state.position = std::move(next);
    bit = move.bit;
  }
  trace.final_position = state.position;
  return trace;
}

template <class Num>
PsiResult psi_impl(const StrategyKind& kind, const Instance<Num>& inst, const RunOptions& options) {
  Trace<Num> trace = run_impl(kind, inst, options);
  if (const auto* h = std::get_if<Halted>(&trace.outcome)) return h->steps;
  return Timeout{options.max_steps};
}

template <class Num>
std::vector<SweepRow<Num>> sweep_impl(const StrategyKind& kind, const std::vector<Num>& half_lengths,
                                      const std::vector<StartPoint<Num>>& starts,
                                      const SweepOptions<Num>& options) {
  if (half_lengths.empty() || starts.empty()) throw std::invalid_argument("sweep grids must be nonempty");
  const bool with_bit = std::holds_alternative<strategy::OneBit>(kind);

  std::vector<SweepRow<Num>> rows;
  for (const Num& D : half_lengths) {
    for (const StartPoint<Num>& start : starts) {
      Num x0 = start.resolve(D);
      if (with_bit) {
        rows.push_back({D, x0, MemoryBit(0), std::size_t{0}});
        rows.push_back({D, x0, MemoryBit(1), std::size_t{0}});
      } else {
        rows.push_back({D, x0, std::nullopt, std::size_t{0}});
      }
    }
  }

  auto evaluate_row = [&](SweepRow<Num>& row) {
    try {
      RunOptions run_options{options.max_steps, row.initial_bit.value_or(MemoryBit(0))};
      Instance<Num> inst{row.half_length, row.start, options.quit_radius};
      PsiResult r = psi_impl(kind, inst, run_options);
      if (const auto* n = std::get_if<std::size_t>(&r)) {
        row.result = *n;
      } else {
        row.result = std::get<Timeout>(r);
      }
    } catch (const std::exception& e) {
      row.result = std::string(e.what());
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(rows.size()));
  if (threads == 1) {
    for (auto& row : rows) evaluate_row(row);
    return rows;
  }
  // Workers claim row indices; each row is written by exactly one worker.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < rows.size(); r = next++) evaluate_row(rows[r]);
      });
    }
  }
  return rows;
}

}  // namespace

Trace<Rational> run(const StrategyKind& kind, const Instance<Rational>& inst, const RunOptions& options) {
  return run_impl(kind, inst, options);
}

Trace<EExtNumber> run(const StrategyKind& kind, const Instance<EExtNumber>& inst,
                      const RunOptions& options) {
  return run_impl(kind, inst, options);
}

PsiResult psi(const StrategyKind& kind, const Instance<Rational>& inst, const RunOptions& options) {
  return psi_impl(kind, inst, options);
}

PsiResult psi(const StrategyKind& kind, const Instance<EExtNumber>& inst, const RunOptions& options) {
  return psi_impl(kind, inst, options);
}

std::vector<SweepRow<Rational>> sweep(const StrategyKind& kind, const std::vector<Rational>& half_lengths,
                                      const std::vector<StartPoint<Rational>>& starts,
                                      const SweepOptions<Rational>& options) {
  return sweep_impl(kind, half_lengths, starts, options);
}

std::vector<SweepRow<EExtNumber>> sweep(const StrategyKind& kind,
                                        const std::vector<EExtNumber>& half_lengths,
                                        const std::vector<StartPoint<EExtNumber>>& starts,
                                        const SweepOptions<EExtNumber>& options) {
  return sweep_impl(kind, half_lengths, starts, options);
}

}  // namespace midloc
