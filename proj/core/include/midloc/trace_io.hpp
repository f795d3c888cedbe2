#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "midloc/simulator.hpp"

namespace midloc {

/// Trace schema:
///
///   {"strategy": "...", "eps"?: "...", "D": N, "x0": N, "b0"?: 0|1,
///    "max_steps": n, "outcome": {"kind": "halted", "steps": n}
///                             | {"kind": "step_limit", "cap": n},
///    "final_x": N,
///    "steps": [{"t": n, "x": N, "side"?: "L"|"R", "d"?: N, "bit"?: 0|1, "delta": N}]}
///
/// N is an exact string "p/q" for rationals and {"rat": "p/q", "ecoef": "p/q"}
/// for a + b/e values. "eps" is the strategy parameter for epsomit and the
/// quit radius for converge. Steps without "side" are Quit observations.
/// With `approximate` set, steps also carry "x_approx"/"delta_approx" doubles.
struct ExportOptions {
  bool approximate = false;
  int indent = -1;
};

std::string trace_to_json(const Trace<Rational>& trace, const ExportOptions& options = {});
std::string trace_to_json(const Trace<EExtNumber>& trace, const ExportOptions& options = {});

/// Same trace without the "steps" array.
std::string trace_summary_json(const Trace<Rational>& trace, const ExportOptions& options = {});
std::string trace_summary_json(const Trace<EExtNumber>& trace, const ExportOptions& options = {});

/// One CSV row per step with columns
/// strategy,eps,D,x0,b0,outcome,t,x,side,d,bit,delta.
/// a + b/e values are written as "a+b/e".
std::string trace_to_csv(const Trace<Rational>& trace);
std::string trace_to_csv(const Trace<EExtNumber>& trace);

using AnyTrace = std::variant<Trace<Rational>, Trace<EExtNumber>>;

/// Parses the JSON schema above back into a trace. Throws
/// std::invalid_argument on malformed input.
AnyTrace trace_from_json(std::string_view text);

/// Sweep schema: {"strategy", "eps"?, "max_steps", "rows": [{"D", "x0", "b0"?,
/// "outcome": "halted"|"timeout"|"error", "psi"?: n, "error"?: "..."}]}.
std::string sweep_to_json(const StrategyKind& kind, const std::vector<SweepRow<Rational>>& rows,
                          const SweepOptions<Rational>& options, const ExportOptions& export_options = {});
std::string sweep_to_json(const StrategyKind& kind, const std::vector<SweepRow<EExtNumber>>& rows,
                          const SweepOptions<EExtNumber>& options,
                          const ExportOptions& export_options = {});

/// Columns strategy,eps,D,x0,b0,outcome,psi,error.
std::string sweep_to_csv(const StrategyKind& kind, const std::vector<SweepRow<Rational>>& rows,
                         const SweepOptions<Rational>& options);
std::string sweep_to_csv(const StrategyKind& kind, const std::vector<SweepRow<EExtNumber>>& rows,
                         const SweepOptions<EExtNumber>& options);

}  // namespace midloc
