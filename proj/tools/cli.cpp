#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "midloc/cantor_maps.hpp"
#include "midloc/digits.hpp"
#include "midloc/eext.hpp"
#include "midloc/errors.hpp"
#include "midloc/impossibility.hpp"
#include "midloc/primes.hpp"
#include "midloc/rational.hpp"
#include "midloc/simulator.hpp"
#include "midloc/trace_io.hpp"

namespace midloc::cli {
namespace {

// A malformed flag value; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimFlags {
  std::string alg;
  std::string eps;
  std::optional<int> b0;
  std::size_t max_steps = 10'000;
  std::string format = "json";
  std::string out;
  bool pretty = false;
};

template <class Num>
Num parse_number(const std::string& text, const char* flag);

template <>
Rational parse_number<Rational>(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not an exact rational literal: '" + text + "'");
  }
}

template <>
EExtNumber parse_number<EExtNumber>(const std::string& text, const char* flag) {
  try {
    return EExtNumber::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not an exact a+b/e literal: '" + text + "'");
  }
}

// "D", "-D", "q*D", optionally followed by "+r" or "-r"; otherwise an
// absolute literal.
template <class Num>
StartPoint<Num> parse_start(const std::string& text) {
  const auto pos = text.find('D');
  if (pos == std::string::npos) return absolute_start(parse_number<Num>(text, "--x0"));
  StartPoint<Num> start{Rational(1), Num(0)};
  const std::string coef = text.substr(0, pos);
  if (coef == "-") {
    start.scale = Rational(-1);
  } else if (!coef.empty()) {
    if (coef.back() != '*') throw UsageError("--x0: expected q*D in '" + text + "'");
    start.scale = parse_number<Rational>(coef.substr(0, coef.size() - 1), "--x0");
  }
  const std::string rest = text.substr(pos + 1);
  if (!rest.empty()) {
    if (rest.front() != '+' && rest.front() != '-') {
      throw UsageError("--x0: expected D+r or D-r in '" + text + "'");
    }
    const Num offset = parse_number<Num>(rest.substr(1), "--x0");
    start.offset = rest.front() == '+' ? offset : -offset;
  }
  return start;
}

StrategyKind resolve_kind(const SimFlags& flags) {
  std::optional<Rational> eps;
  if (flags.alg == "epsomit") {
    if (flags.eps.empty()) throw UsageError("--alg epsomit requires --eps");
    eps = parse_number<Rational>(flags.eps, "--eps");
    if (!(*eps > Rational(0)) || !(*eps < Rational(1, 2))) {
      throw UsageError("--eps for epsomit must lie in (0, 1/2)");
    }
  } else if (flags.alg == "converge") {
    if (flags.eps.empty()) throw UsageError("--alg converge requires --eps (the quit radius)");
  } else if (!flags.eps.empty()) {
    throw UsageError("--eps only applies to converge and epsomit");
  }
  if (flags.b0 && flags.alg != "onebit") throw UsageError("--b0 only applies to onebit");
  return kind_from_name(flags.alg, eps);
}

template <class Num>
std::optional<Num> quit_radius(const SimFlags& flags) {
  if (flags.alg != "converge") return std::nullopt;
  return parse_number<Num>(flags.eps, "--eps");
}

ExportOptions export_options(const SimFlags& flags) {
  ExportOptions options;
  if (flags.pretty) {
    options.approximate = true;
    options.indent = 2;
  }
  return options;
}

void emit(const SimFlags& flags, const std::string& text, std::ostream& out) {
  if (flags.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) throw UsageError("--out: cannot open '" + flags.out + "' for writing");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

template <class Num>
int exec_trace(const SimFlags& flags, const std::string& d_text, const std::string& x_text,
               bool with_steps, std::ostream& out) {
  const StrategyKind kind = resolve_kind(flags);
  const Instance<Num> inst{parse_number<Num>(d_text, "--D"), parse_number<Num>(x_text, "--x0"),
                           quit_radius<Num>(flags)};
  RunOptions options;
  options.max_steps = flags.max_steps;
  options.initial_bit = MemoryBit(flags.b0.value_or(0));
  const Trace<Num> trace = run(kind, inst, options);
  std::string text;
  if (flags.format == "csv") {
    if (with_steps) {
      text = trace_to_csv(trace);
    } else {
      SweepRow<Num> row{inst.half_length, inst.position, trace.initial_bit, Timeout{flags.max_steps}};
      if (const auto* h = std::get_if<Halted>(&trace.outcome)) row.result = h->steps;
      SweepOptions<Num> sweep_options;
      sweep_options.max_steps = flags.max_steps;
      sweep_options.quit_radius = inst.quit_radius;
      text = sweep_to_csv(kind, {row}, sweep_options);
    }
  } else {
    text = with_steps ? trace_to_json(trace, export_options(flags))
                      : trace_summary_json(trace, export_options(flags));
  }
  emit(flags, text, out);
  return trace.halted() ? kSuccess : kTimeout;
}

template <class Num>
int exec_sweep(const SimFlags& flags, const std::vector<std::string>& d_texts,
               const std::vector<std::string>& x_texts, unsigned threads, std::ostream& out) {
  const StrategyKind kind = resolve_kind(flags);
  std::vector<Num> half_lengths;
  for (const auto& t : d_texts) half_lengths.push_back(parse_number<Num>(t, "--D"));
  std::vector<StartPoint<Num>> starts;
  for (const auto& t : x_texts) starts.push_back(parse_start<Num>(t));
  SweepOptions<Num> options;
  options.max_steps = flags.max_steps;
  options.quit_radius = quit_radius<Num>(flags);
  options.threads = threads;
  const auto rows = sweep(kind, half_lengths, starts, options);
  emit(flags,
       flags.format == "csv" ? sweep_to_csv(kind, rows, options)
                             : sweep_to_json(kind, rows, options, export_options(flags)),
       out);
  bool any_timeout = false;
  bool any_error = false;
  for (const auto& row : rows) {
    any_timeout = any_timeout || std::holds_alternative<Timeout>(row.result);
    any_error = any_error || std::holds_alternative<std::string>(row.result);
  }
  if (any_error) return kInvalidInstance;
  return any_timeout ? kTimeout : kSuccess;
}

nlohmann::ordered_json expansion_json(const DigitExpansion& e) {
  return {{"base", e.base}, {"text", e.to_string()}};
}

int exec_classify(const std::string& value_text, bool pretty, std::ostream& out) {
  const Rational value = parse_number<Rational>(value_text, "--value");
  const Rational frac = value.frac();
  nlohmann::ordered_json j;
  j["value"] = value.to_string();
  j["floor"] = value.floor().get_str();
  j["frac"] = frac.to_string();
  j["is_integer"] = value.is_integer();
  const DeltaClass k = delta_class(value);
  j["delta_class"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
  const auto ternary = cantor_digits(frac);
  j["is_cantor"] = ternary.has_value();
  j["ternary"] = expansion_json(ternary ? *ternary : normalized(expand(frac, 3)));
  j["binary"] = expansion_json(normalized(expand(frac, 2)));
  if (pretty) j["value_approx"] = value.to_double();
  out << j.dump(pretty ? 2 : -1) << '\n';
  return kSuccess;
}

int exec_check_symmetric(const std::string& map_name, const std::string& d_text,
                         const std::string& x_text, std::size_t horizon, bool pretty,
                         std::ostream& out) {
  const ShippedMap* shipped = nullptr;
  try {
    shipped = &shipped_symmetric_map(map_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--map: ") + e.what());
  }
  const Rational half_length =
      d_text.empty() ? shipped->witness_half_length : parse_number<Rational>(d_text, "--D");
  const Rational x_star =
      x_text.empty() ? shipped->witness_x_star : parse_number<Rational>(x_text, "--xstar");
  if (!(half_length > Rational(0))) throw InvalidInstance("D must be positive");
  const bool symmetric = check_symmetry(shipped->map, grid_samples(half_length, 64));
  const Instance<Rational> inst = build_counterexample(shipped->map, half_length, x_star);
  const bool cycles = verify_two_cycle(shipped->map, inst, horizon);
  nlohmann::ordered_json j;
  j["map"] = shipped->map.name;
  j["D"] = half_length.to_string();
  j["x_star"] = x_star.to_string();
  j["symmetric"] = symmetric;
  j["counterexample"] = {{"D", inst.half_length.to_string()}, {"x0", inst.position.to_string()}};
  j["horizon"] = horizon;
  j["two_cycle"] = cycles;
  out << j.dump(pretty ? 2 : -1) << '\n';
  return symmetric && cycles ? kSuccess : kTimeout;
}

void add_sim_flags(CLI::App& cmd, SimFlags& flags) {
  cmd.add_option("--alg", flags.alg, "Strategy")
      ->required()
      ->check(CLI::IsMember({"converge", "algebraic", "epsomit", "onebit", "noncantor"}));
  cmd.add_option("--eps", flags.eps, "epsomit parameter, or converge quit radius");
  cmd.add_option("--b0", flags.b0, "Initial memory bit (onebit)")->check(CLI::IsMember({0, 1}));
  cmd.add_option("--max-steps", flags.max_steps, "Step cap")->check(CLI::PositiveNumber);
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--out", flags.out, "Write output to this file instead of stdout");
  cmd.add_flag("--pretty", flags.pretty, "Indent JSON and add approximate decimal fields");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator for midpoint localization on a line segment", "midloc"};
  app.require_subcommand(1);

  SimFlags run_flags;
  std::string run_d;
  std::string run_x;
  auto* run_cmd = app.add_subcommand("run", "Simulate one instance and print the full trace");
  add_sim_flags(*run_cmd, run_flags);
  run_cmd->add_option("--D", run_d, "Half-length")->required();
  run_cmd->add_option("--x0", run_x, "Start position")->required();

  SimFlags psi_flags;
  std::string psi_d;
  std::string psi_x;
  auto* psi_cmd = app.add_subcommand("psi", "Print the number of steps to reach the midpoint");
  add_sim_flags(*psi_cmd, psi_flags);
  psi_cmd->add_option("--D", psi_d, "Half-length")->required();
  psi_cmd->add_option("--x0", psi_x, "Start position")->required();

  SimFlags sweep_flags;
  std::vector<std::string> sweep_d;
  std::vector<std::string> sweep_x;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate steps over a grid of instances");
  add_sim_flags(*sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--D", sweep_d, "Comma-separated half-lengths")->required()->delimiter(',');
  sweep_cmd->add_option("--x0", sweep_x, "Comma-separated starts; D, -D, q*D, D+r allowed")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string classify_value;
  bool classify_pretty = false;
  auto* classify_cmd = app.add_subcommand("classify", "Number-theoretic diagnostics for a rational");
  classify_cmd->add_option("--value", classify_value, "Rational value")->required();
  classify_cmd->add_flag("--pretty", classify_pretty, "Indent JSON");

  std::string sym_map = "unit";
  std::string sym_d;
  std::string sym_x;
  std::size_t horizon = 1000;
  bool sym_pretty = false;
  auto* sym_cmd = app.add_subcommand(
      "check-symmetric", "Build and verify the two-cycle counterexample for a symmetric map");
  std::vector<std::string> map_names;
  for (const auto& m : shipped_symmetric_maps()) map_names.push_back(m.map.name);
  sym_cmd->add_option("--map", sym_map, "Built-in symmetric map")->check(CLI::IsMember(map_names));
  sym_cmd->add_option("--D", sym_d, "Witness half-length (default: the map's witness)");
  sym_cmd->add_option("--xstar", sym_x, "Witness position (default: the map's witness)");
  sym_cmd->add_option("--horizon", horizon, "Steps to verify")->check(CLI::PositiveNumber);
  sym_cmd->add_flag("--pretty", sym_pretty, "Indent JSON");

  app.add_subcommand("version", "Print the version");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "midloc: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kUsage;
  }

  try {
    if (run_cmd->parsed()) {
      return uses_eext(resolve_kind(run_flags))
                 ? exec_trace<EExtNumber>(run_flags, run_d, run_x, true, out)
                 : exec_trace<Rational>(run_flags, run_d, run_x, true, out);
    }
    if (psi_cmd->parsed()) {
      return uses_eext(resolve_kind(psi_flags))
                 ? exec_trace<EExtNumber>(psi_flags, psi_d, psi_x, false, out)
                 : exec_trace<Rational>(psi_flags, psi_d, psi_x, false, out);
    }
    if (sweep_cmd->parsed()) {
      return uses_eext(resolve_kind(sweep_flags))
                 ? exec_sweep<EExtNumber>(sweep_flags, sweep_d, sweep_x, threads, out)
                 : exec_sweep<Rational>(sweep_flags, sweep_d, sweep_x, threads, out);
    }
    if (classify_cmd->parsed()) return exec_classify(classify_value, classify_pretty, out);
    if (sym_cmd->parsed()) return exec_check_symmetric(sym_map, sym_d, sym_x, horizon, sym_pretty, out);
    out << "midloc " << MIDLOC_VERSION << '\n';
    return kSuccess;
  } catch (const UsageError& e) {
    err << "midloc: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInstance& e) {
    err << "midloc: invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const ResourceLimit& e) {
    err << "midloc: computation limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "midloc: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace midloc::cli
