#include "lpevac/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "lpevac/chord_arc.hpp"
#include "lpevac/evacuation.hpp"
#include "lpevac/lower_bound.hpp"

namespace lpevac {

using nlohmann::ordered_json;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

std::string shortest(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

void require_steps(int steps, int minimum = 2) {
  if (steps < minimum) throw UsageError("--steps must be at least " + std::to_string(minimum));
}

void stamp(CurveTable& table, const std::string& command) {
  table.set_metadata("tool", "lpevac");
  table.set_metadata("version", LPEVAC_VERSION);
  table.set_metadata("format_version", std::to_string(kTableFormatVersion));
  table.set_metadata("command", command);
}

double linspace(double lo, double hi, int i, int steps) {
  if (steps == 1) return lo;
  if (i + 1 == steps) return hi;
  return lo + (hi - lo) * i / (steps - 1);
}

// Adding zero turns a negative zero into a positive one.
ordered_json point_json(Point2 v) { return {{"x", v.x + 0.0}, {"y", v.y + 0.0}}; }

ordered_json number_or_name(const PExponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument parsing

PExponent parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return PExponent::infinity();
  double value = 0.0;
  try {
    value = parse_number(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("p must be a number >= 1 or 'inf', got '" + text + "'");
  }
  if (std::isinf(value) && value > 0) return PExponent::infinity();
  if (!(value >= 1.0)) throw UsageError("p must be a number >= 1 or 'inf', got '" + text + "'");
  return PExponent::finite(value);
}

double parse_angle(const std::string& text) {
  static const std::regex multiple_of_pi(
      R"(^\s*([+-]?)\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, multiple_of_pi)) {
    const double numerator = m[2].matched ? std::stod(m[2].str()) : 1.0;
    const double denominator = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (denominator == 0.0) throw UsageError("angle divides by zero: '" + text + "'");
    const double value = std::numbers::pi * numerator / denominator;
    return m[1].str() == "-" ? -value : value;
  }
  try {
    const double value = parse_number(text);
    if (std::isfinite(value)) return value;
  } catch (const std::invalid_argument&) {
  }
  throw UsageError("angle must be radians or a multiple of pi such as pi/4, got '" + text + "'");
}

std::vector<PExponent> p_grid(const PExponent& p_min, const PExponent& p_max, int steps) {
  if (p_max.value() < p_min.value()) throw UsageError("p range requires p_min <= p_max");
  if (p_min == p_max) {
    require_steps(steps, 1);
  } else {
    require_steps(steps);
  }
  if (p_max.is_infinite()) {
    if (!p_min.is_infinite() || steps != 1) {
      throw UsageError("an infinite p is allowed only as a single point (--p-min inf --p-max inf --steps 1)");
    }
    return {p_min};
  }
  std::vector<PExponent> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    out.push_back(PExponent::finite(linspace(p_min.value(), p_max.value(), i, steps)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

CurveTable cmd_pi(const PExponent& p_min, const PExponent& p_max, int steps) {
  const auto grid = p_grid(p_min, p_max, steps);
  CurveTable table({"p", "pi_p"});
  stamp(table, "pi");
  table.set_metadata("p_min", p_min.to_string());
  table.set_metadata("p_max", p_max.to_string());
  table.set_metadata("steps", std::to_string(steps));
  for (const auto& p : grid) table.add_row({p.value(), pi_p(p)});
  return table;
}

CurveTable cmd_cost(const PExponent& p_min, const PExponent& p_max, int steps) {
  const auto grid = p_grid(p_min, p_max, steps);
  CurveTable table({"p", "upper_cost", "weak_lower", "generic_lower", "gap", "e_p", "gamma_p",
                    "explored_fraction"});
  stamp(table, "cost");
  table.set_metadata("p_min", p_min.to_string());
  table.set_metadata("p_max", p_max.to_string());
  table.set_metadata("steps", std::to_string(steps));
  table.set_metadata("theta_grid", std::to_string(MinChordSolver::kDefaultThetaGrid));
  table.set_metadata("generic_lower_is_weak_above_p", shortest(kGenericBoundMaxP));
  for (const auto& p : grid) {
    const OptimalityReport report = optimality_report(p);
    const CriticalParams critical = critical_params(p);
    table.add_row({p.value(), report.upper, report.weak_lower, report.generic_lower, report.gap,
                   critical.e_p, critical.gamma_p, critical.explored_fraction()});
  }
  return table;
}

CurveTable cmd_profile(const PExponent& p, double phi, int steps) {
  require_steps(steps);
  if (std::abs(phi) <= 1e-12) {
    phi = 0.0;
  } else if (std::abs(phi - kQuarterPi) <= 1e-12) {
    phi = kQuarterPi;
  } else {
    throw UsageError("profile supports --phi 0 or --phi pi/4 only");
  }
  const WirelessSearch search({p, phi});
  const double pi = search.circle().pi();
  CurveTable table({"tau", "delta", "evac_time"});
  stamp(table, "profile");
  table.set_metadata("p", p.to_string());
  table.set_metadata("phi", shortest(phi));
  table.set_metadata("steps", std::to_string(steps));
  for (int i = 0; i < steps; ++i) {
    const double tau = linspace(0.0, pi, i, steps);
    const double delta = search.separation(tau);
    table.add_row({tau, delta, 1.0 + tau + delta});
  }
  return table;
}

CurveTable cmd_sigma(const PExponent& p, int steps, std::optional<double> arc_len) {
  require_steps(steps);
  const double u = arc_len ? *arc_len : critical_params(p).e_p;
  const MinChordSolver solver(p, 2);
  if (!(u > 0.0 && u < solver.circle().perimeter())) {
    throw UsageError("--arc-len must lie in (0, 2 pi_p)");
  }
  CurveTable table({"theta", "sigma"});
  stamp(table, "sigma");
  table.set_metadata("p", p.to_string());
  table.set_metadata("arc_len", shortest(u));
  table.set_metadata("arc_len_source", arc_len ? "argument" : "e_p");
  table.set_metadata("steps", std::to_string(steps));
  for (int i = 0; i < steps; ++i) {
    const double theta = linspace(0.0, kQuarterPi, i, steps);
    table.add_row({theta, solver.sigma(theta, u)});
  }
  return table;
}

CurveTable cmd_lchord(const PExponent& p, int steps) {
  require_steps(steps);
  const MinChordSolver solver(p);
  const double pi = solver.circle().pi();
  CurveTable table({"u", "L"});
  stamp(table, "lchord");
  table.set_metadata("p", p.to_string());
  table.set_metadata("steps", std::to_string(steps));
  table.set_metadata("theta_grid", std::to_string(MinChordSolver::kDefaultThetaGrid));
  for (int i = 0; i < steps; ++i) {
    const double u = linspace(0.0, pi, i, steps);
    table.add_row({u, solver.value(u)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Verification and JSON reports

VerifyResult cmd_verify(const VerifyOptions& options) {
  if (options.ps.empty()) throw UsageError("verify needs at least one --p value");
  if (options.grid < 64) throw UsageError("--grid must be at least 64");
  if (!(options.tol >= 0.0) || !(options.gap_tol >= 0.0) || !(options.chord_tol >= 0.0)) {
    throw UsageError("tolerances must be non-negative");
  }

  VerifyResult result;
  result.all_passed = true;
  ordered_json doc;
  doc["tool"] = "lpevac";
  doc["version"] = LPEVAC_VERSION;
  doc["grid"] = options.grid;
  doc["tol"] = options.tol;
  doc["gap_tol"] = options.gap_tol;
  doc["chord_tol"] = options.chord_tol;
  ordered_json rows = ordered_json::array();

  for (const auto& p : options.ps) {
    ordered_json row;
    row["p"] = number_or_name(p);
    if (p.is_infinite() || p.value() < kVerifyMinP || p.value() > kVerifyMaxP) {
      const std::string note = "p = " + p.to_string() + " is outside the validated range [" +
                               shortest(kVerifyMinP) + ", " + shortest(kVerifyMaxP) + "]";
      result.warnings.push_back(note);
      row["warning"] = note;
    }

    const MonotonicityReport l_report = verify_L_monotone(p, options.grid, options.tol);
    const MonotonicityReport s_report = verify_sigma_monotone(p, options.grid, options.tol);
    const CriticalParams critical = critical_params(p);
    const OptimalityReport optimality = optimality_report(p);
    const double chord = min_chord_L(p, critical.e_p);
    const double chord_error = std::abs(chord - critical.gamma_p);
    const bool chord_ok = chord_error <= options.chord_tol;
    const bool gap_ok = std::abs(optimality.gap) <= options.gap_tol;

    row["L_monotone"] = {{"direction", to_string(l_report.direction)},
                         {"max_violation", l_report.max_violation},
                         {"passed", l_report.passed}};
    row["sigma_monotone"] = {{"direction", to_string(s_report.direction)},
                             {"max_violation", s_report.max_violation},
                             {"passed", s_report.passed}};
    row["L_at_e_equals_gamma"] = {{"L", chord},
                                  {"gamma_p", critical.gamma_p},
                                  {"abs_error", chord_error},
                                  {"passed", chord_ok}};
    row["optimality_gap"] = {{"upper", optimality.upper},
                             {"generic_lower", optimality.generic_lower},
                             {"gap", optimality.gap},
                             {"generic_lower_is_weak", optimality.generic_substituted},
                             {"passed", gap_ok}};
    const bool passed = l_report.passed && s_report.passed && chord_ok && gap_ok;
    row["passed"] = passed;
    result.all_passed = result.all_passed && passed;
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  doc["all_passed"] = result.all_passed;
  result.json = doc.dump(2) + "\n";
  return result;
}

std::string cmd_simulate(const PExponent& p, double phi, double exit_phi) {
  if (!(phi >= -1e-12 && phi <= kQuarterPi + 1e-12)) {
    throw UsageError("--phi must lie in [0, pi/4]");
  }
  const WirelessSearch search({p, std::clamp(phi, 0.0, kQuarterPi)});
  const EvacOutcome outcome = search.simulate_exit(search.circle().rho(exit_phi));
  ordered_json doc;
  doc["p"] = number_or_name(p);
  doc["phi"] = search.params().phi;
  doc["exit"] = {{"phi", outcome.exit.phi}, {"x", outcome.exit.point.x}, {"y", outcome.exit.point.y}};
  doc["tau"] = outcome.tau;
  doc["found_by"] = outcome.found_counter_clockwise ? "counter_clockwise" : "clockwise";
  doc["positions"] = {{"counter_clockwise", point_json(outcome.finder_positions.first)},
                      {"clockwise", point_json(outcome.finder_positions.second)}};
  doc["separation"] = outcome.separation;
  doc["total_cost"] = outcome.total_cost;
  return doc.dump(2) + "\n";
}

std::string cmd_params(const PExponent& p) {
  const CriticalParams critical = critical_params(p);
  ordered_json doc;
  doc["p"] = number_or_name(p);
  doc["branch"] = to_string(critical.branch);
  doc["w_p"] = critical.w_p ? ordered_json(*critical.w_p) : ordered_json(nullptr);
  doc["s_p"] = critical.s_p;
  doc["e_p"] = critical.e_p;
  doc["gamma_p"] = critical.gamma_p;
  doc["pi_p"] = pi_p(p);
  doc["explored_fraction"] = critical.explored_fraction();
  doc["worst_case_cost"] = worst_case_cost(p);
  doc["limit_values"] = critical.limit_values;
  return doc.dump(2) + "\n";
}

}  // namespace lpevac
