#include "midloc/trace_io.hpp"

#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <nlohmann/json.hpp>

namespace midloc {
namespace {

using json = nlohmann::ordered_json;

json encode(const Rational& v) { return v.to_string(); }
json encode(const EExtNumber& v) { return {{"rat", v.rat().to_string()}, {"ecoef", v.ecoef().to_string()}}; }

std::string csv_text(const Rational& v) { return v.to_string(); }
std::string csv_text(const EExtNumber& v) { return v.to_string(); }

template <class Num>
Num decode(const json& j);

template <>
Rational decode<Rational>(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected an exact rational string");
  return Rational::parse(j.get<std::string>());
}

template <>
EExtNumber decode<EExtNumber>(const json& j) {
  if (j.is_string()) return EExtNumber(Rational::parse(j.get<std::string>()));
  if (!j.is_object() || !j.contains("rat") || !j.contains("ecoef")) {
    throw std::invalid_argument("expected {rat, ecoef}");
  }
  return {decode<Rational>(j.at("rat")), decode<Rational>(j.at("ecoef"))};
}

template <class Num>
std::optional<std::string> eps_text(const StrategyKind& kind, const std::optional<Num>& radius) {
  if (const auto* eo = std::get_if<strategy::EpsOmit>(&kind)) return eo->eps.to_string();
  if (radius) return csv_text(*radius);
  return std::nullopt;
}

template <class Num>
json eps_json(const StrategyKind& kind, const std::optional<Num>& radius) {
  if (const auto* eo = std::get_if<strategy::EpsOmit>(&kind)) return encode(eo->eps);
  if (radius) return encode(*radius);
  return nullptr;
}

json outcome_json(const Outcome& outcome) {
  if (const auto* h = std::get_if<Halted>(&outcome)) return {{"kind", "halted"}, {"steps", h->steps}};
  return {{"kind", "step_limit"}, {"cap", std::get<StepLimitReached>(outcome).cap}};
}

std::string outcome_text(const Outcome& outcome) {
  if (const auto* h = std::get_if<Halted>(&outcome)) return "halted:" + std::to_string(h->steps);
  return "step_limit:" + std::to_string(std::get<StepLimitReached>(outcome).cap);
}

template <class Num>
json header_json(const Trace<Num>& trace) {
  json j;
  j["strategy"] = std::string(kind_name(trace.kind));
  if (json eps = eps_json(trace.kind, trace.instance.quit_radius); !eps.is_null()) j["eps"] = eps;
  j["D"] = encode(trace.instance.half_length);
  j["x0"] = encode(trace.instance.position);
  if (trace.initial_bit) j["b0"] = trace.initial_bit->value();
  j["max_steps"] = trace.max_steps;
  j["outcome"] = outcome_json(trace.outcome);
  j["final_x"] = encode(trace.final_position);
  return j;
}

template <class Num>
json step_json(const TraceStep<Num>& step, bool approximate) {
  json j;
  j["t"] = step.t;
  j["x"] = encode(step.position);
  if (const auto* seen = std::get_if<Seen<Num>>(&step.observation)) {
    j["side"] = side_name(seen->side);
    j["d"] = encode(seen->distance);
  }
  if (step.bit) j["bit"] = step.bit->value();
  j["delta"] = encode(step.displacement);
  if (approximate) {
    j["x_approx"] = step.position.to_double();
    j["delta_approx"] = step.displacement.to_double();
  }
  return j;
}

template <class Num>
std::string trace_json_impl(const Trace<Num>& trace, const ExportOptions& options, bool with_steps) {
  json j = header_json(trace);
  if (with_steps) {
    json steps = json::array();
    for (const auto& step : trace.steps) steps.push_back(step_json(step, options.approximate));
    j["steps"] = std::move(steps);
  }
  return j.dump(options.indent);
}

template <class Num>
std::string trace_csv_impl(const Trace<Num>& trace) {
  std::ostringstream out;
  out << "strategy,eps,D,x0,b0,outcome,t,x,side,d,bit,delta\n";
  const std::string prefix = std::string(kind_name(trace.kind)) + "," +
                             eps_text(trace.kind, trace.instance.quit_radius).value_or("") + "," +
                             csv_text(trace.instance.half_length) + "," +
                             csv_text(trace.instance.position) + "," +
                             (trace.initial_bit ? std::to_string(trace.initial_bit->value()) : "") +
                             "," + outcome_text(trace.outcome);
  for (const auto& step : trace.steps) {
    out << prefix << ',' << step.t << ',' << csv_text(step.position) << ',';
    if (const auto* seen = std::get_if<Seen<Num>>(&step.observation)) {
      out << side_name(seen->side) << ',' << csv_text(seen->distance);
    } else {
      out << ',';
    }
    out << ',' << (step.bit ? std::to_string(step.bit->value()) : "") << ','
        << csv_text(step.displacement) << '\n';
  }
  return out.str();
}

template <class Num>
Trace<Num> trace_from_json_impl(const json& j) {
  const std::string name = j.at("strategy").get<std::string>();
  std::optional<Num> radius;
  std::optional<Rational> eps_param;
  if (j.contains("eps")) {
    if (name == "epsomit") {
      eps_param = decode<Rational>(j.at("eps"));
    } else {
      radius = decode<Num>(j.at("eps"));
    }
  }
  Trace<Num> trace{kind_from_name(name, eps_param),
                   Instance<Num>{decode<Num>(j.at("D")), decode<Num>(j.at("x0")), radius},
                   std::nullopt,
                   {},
                   Halted{},
                   decode<Num>(j.at("final_x")),
                   j.value("max_steps", std::size_t{0})};
  if (j.contains("b0")) trace.initial_bit = MemoryBit(j.at("b0").get<int>());

  const json& outcome = j.at("outcome");
  const std::string outcome_kind = outcome.at("kind").get<std::string>();
  if (outcome_kind == "halted") {
    trace.outcome = Halted{outcome.at("steps").get<std::size_t>()};
  } else if (outcome_kind == "step_limit") {
    trace.outcome = StepLimitReached{outcome.at("cap").get<std::size_t>()};
  } else {
    throw std::invalid_argument("unknown outcome kind '" + outcome_kind + "'");
  }

  for (const json& s : j.value("steps", json::array())) {
    TraceStep<Num> step;
    step.t = s.at("t").get<std::size_t>();
    step.position = decode<Num>(s.at("x"));
    if (s.contains("side")) {
      const std::string side = s.at("side").get<std::string>();
      if (side != "L" && side != "R") throw std::invalid_argument("side must be L or R");
      step.observation = Seen<Num>{side == "L" ? Side::left : Side::right, decode<Num>(s.at("d"))};
    } else {
      step.observation = Quit{};
    }
    if (s.contains("bit")) step.bit = MemoryBit(s.at("bit").get<int>());
    step.displacement = decode<Num>(s.at("delta"));
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

template <class Num>
std::string sweep_json_impl(const StrategyKind& kind, const std::vector<SweepRow<Num>>& rows,
                            const SweepOptions<Num>& options, const ExportOptions& export_options) {
  json j;
  j["strategy"] = std::string(kind_name(kind));
  if (json eps = eps_json(kind, options.quit_radius); !eps.is_null()) j["eps"] = eps;
  j["max_steps"] = options.max_steps;
  json out_rows = json::array();
  for (const auto& row : rows) {
    json r;
    r["D"] = encode(row.half_length);
    r["x0"] = encode(row.start);
    if (row.initial_bit) r["b0"] = row.initial_bit->value();
    if (const auto* n = std::get_if<std::size_t>(&row.result)) {
      r["outcome"] = "halted";
      r["psi"] = *n;
    } else if (std::holds_alternative<Timeout>(row.result)) {
      r["outcome"] = "timeout";
    } else {
      r["outcome"] = "error";
      r["error"] = std::get<std::string>(row.result);
    }
    if (export_options.approximate) {
      r["D_approx"] = row.half_length.to_double();
      r["x0_approx"] = row.start.to_double();
    }
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  return j.dump(export_options.indent);
}

template <class Num>
std::string sweep_csv_impl(const StrategyKind& kind, const std::vector<SweepRow<Num>>& rows,
                           const SweepOptions<Num>& options) {
  std::ostringstream out;
  out << "strategy,eps,D,x0,b0,outcome,psi,error\n";
  const std::string eps = eps_text(kind, options.quit_radius).value_or("");
  for (const auto& row : rows) {
    out << kind_name(kind) << ',' << eps << ',' << csv_text(row.half_length) << ','
        << csv_text(row.start) << ',' << (row.initial_bit ? std::to_string(row.initial_bit->value()) : "")
        << ',';
    if (const auto* n = std::get_if<std::size_t>(&row.result)) {
      out << "halted," << *n << ',';
    } else if (std::holds_alternative<Timeout>(row.result)) {
      out << "timeout,,";
    } else {
      // Error messages never contain newlines; commas are replaced.
      std::string msg = std::get<std::string>(row.result);
      for (char& c : msg) {
        if (c == ',') c = ';';
      }
      out << "error,," << msg;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string trace_to_json(const Trace<Rational>& trace, const ExportOptions& options) {
  return trace_json_impl(trace, options, true);
}
std::string trace_to_json(const Trace<EExtNumber>& trace, const ExportOptions& options) {
  return trace_json_impl(trace, options, true);
}
std::string trace_summary_json(const Trace<Rational>& trace, const ExportOptions& options) {
  return trace_json_impl(trace, options, false);
}
std::string trace_summary_json(const Trace<EExtNumber>& trace, const ExportOptions& options) {
  return trace_json_impl(trace, options, false);
}
std::string trace_to_csv(const Trace<Rational>& trace) { return trace_csv_impl(trace); }
std::string trace_to_csv(const Trace<EExtNumber>& trace) { return trace_csv_impl(trace); }

AnyTrace trace_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("strategy").get<std::string>() == "algebraic") return trace_from_json_impl<EExtNumber>(j);
    return trace_from_json_impl<Rational>(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace JSON: ") + e.what());
  }
}

std::string sweep_to_json(const StrategyKind& kind, const std::vector<SweepRow<Rational>>& rows,
                          const SweepOptions<Rational>& options, const ExportOptions& export_options) {
  return sweep_json_impl(kind, rows, options, export_options);
}
std::string sweep_to_json(const StrategyKind& kind, const std::vector<SweepRow<EExtNumber>>& rows,
                          const SweepOptions<EExtNumber>& options, const ExportOptions& export_options) {
  return sweep_json_impl(kind, rows, options, export_options);
}
std::string sweep_to_csv(const StrategyKind& kind, const std::vector<SweepRow<Rational>>& rows,
                         const SweepOptions<Rational>& options) {
  return sweep_csv_impl(kind, rows, options);
}
std::string sweep_to_csv(const StrategyKind& kind, const std::vector<SweepRow<EExtNumber>>& rows,
                         const SweepOptions<EExtNumber>& options) {
  return sweep_csv_impl(kind, rows, options);
}

}  // namespace midloc
