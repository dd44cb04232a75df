#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpevac/chord_arc.hpp"
#include "lpevac/commands.hpp"
#include "lpevac/evacuation.hpp"
#include "lpevac/lower_bound.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Python callers pass p as a float; math.inf selects the square.
lpevac::PExponent to_p(double p) { return lpevac::PExponent::finite(p); }

py::tuple as_tuple(lpevac::Point2 v) { return py::make_tuple(v.x, v.y); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-robot wireless evacuation on l_p unit circles";
  m.attr("__version__") = LPEVAC_VERSION;

  py::enum_<lpevac::Branch>(m, "Branch")
      .value("PHI_0", lpevac::Branch::PHI_0)
      .value("PHI_QUARTER", lpevac::Branch::PHI_QUARTER);

  py::enum_<lpevac::Direction>(m, "Direction")
      .value("INCREASING", lpevac::Direction::INCREASING)
      .value("DECREASING", lpevac::Direction::DECREASING)
      .value("CONSTANT", lpevac::Direction::CONSTANT);

  py::class_<lpevac::CriticalParams>(m, "CriticalParams")
      .def_property_readonly("p", [](const lpevac::CriticalParams& c) { return c.p.value(); })
      .def_readonly("w_p", &lpevac::CriticalParams::w_p)
      .def_readonly("s_p", &lpevac::CriticalParams::s_p)
      .def_readonly("e_p", &lpevac::CriticalParams::e_p)
      .def_readonly("gamma_p", &lpevac::CriticalParams::gamma_p)
      .def_readonly("branch", &lpevac::CriticalParams::branch)
      .def_readonly("limit_values", &lpevac::CriticalParams::limit_values)
      .def_property_readonly("discovery_cost", &lpevac::CriticalParams::discovery_cost)
      .def_property_readonly("explored_fraction", &lpevac::CriticalParams::explored_fraction)
      .def("__repr__", [](const lpevac::CriticalParams& c) {
        return "CriticalParams(p=" + c.p.to_string() + ", branch=" + lpevac::to_string(c.branch) +
               ", e_p=" + std::to_string(c.e_p) + ", gamma_p=" + std::to_string(c.gamma_p) + ")";
      });

  py::class_<lpevac::MonotonicityReport>(m, "MonotonicityReport")
      .def_property_readonly("p", [](const lpevac::MonotonicityReport& r) { return r.p.value(); })
      .def_readonly("grid_size", &lpevac::MonotonicityReport::grid_size)
      .def_readonly("direction", &lpevac::MonotonicityReport::direction)
      .def_readonly("max_violation", &lpevac::MonotonicityReport::max_violation)
      .def_readonly("tolerance", &lpevac::MonotonicityReport::tolerance)
      .def_readonly("passed", &lpevac::MonotonicityReport::passed);

  py::class_<lpevac::OptimalityReport>(m, "OptimalityReport")
      .def_property_readonly("p", [](const lpevac::OptimalityReport& r) { return r.p.value(); })
      .def_readonly("upper", &lpevac::OptimalityReport::upper)
      .def_readonly("weak_lower", &lpevac::OptimalityReport::weak_lower)
      .def_readonly("generic_lower", &lpevac::OptimalityReport::generic_lower)
      .def_readonly("gap", &lpevac::OptimalityReport::gap)
      .def_readonly("generic_substituted", &lpevac::OptimalityReport::generic_substituted);

  py::class_<lpevac::CurveTable>(m, "CurveTable")
      .def_property_readonly("columns", &lpevac::CurveTable::columns)
      .def_property_readonly("rows", &lpevac::CurveTable::rows)
      .def_property_readonly("metadata", &lpevac::CurveTable::metadata)
      .def("column", &lpevac::CurveTable::column, "name"_a)
      .def("to_csv", &lpevac::CurveTable::to_csv)
      .def("to_json", &lpevac::CurveTable::to_json)
      .def_static("from_csv", &lpevac::CurveTable::from_csv, "text"_a);

  m.def("pi_p", [](double p) { return lpevac::pi_p(to_p(p)); }, "p"_a, "Half perimeter of the unit circle.");
  m.def("chord_length",
        [](double p, std::pair<double, double> a, std::pair<double, double> b) {
          return lpevac::chord_length(to_p(p), {a.first, a.second}, {b.first, b.second});
        },
        "p"_a, "a"_a, "b"_a);

  m.def("robot_positions",
        [](double p, double phi, double tau) {
          const auto [ccw, cw] = lpevac::robot_positions({to_p(p), phi}, tau);
          return py::make_tuple(as_tuple(ccw), as_tuple(cw));
        },
        "p"_a, "phi"_a, "tau"_a, "Positions (counter-clockwise robot, clockwise robot) after time tau.");
  m.def("separation", [](double p, double phi, double tau) { return lpevac::separation({to_p(p), phi}, tau); },
        "p"_a, "phi"_a, "tau"_a);
  m.def("evac_time", [](double p, double phi, double tau) { return lpevac::evac_time({to_p(p), phi}, tau); },
        "p"_a, "phi"_a, "tau"_a);
  m.def("simulate_exit",
        [](double p, double phi, double exit_phi) {
          const auto exit = lpevac::rho(to_p(p), exit_phi);
          const auto out = lpevac::simulate_exit({to_p(p), phi}, exit);
          py::dict d;
          d["exit"] = as_tuple(out.exit.point);
          d["tau"] = out.tau;
          d["counter_clockwise"] = as_tuple(out.finder_positions.first);
          d["clockwise"] = as_tuple(out.finder_positions.second);
          d["separation"] = out.separation;
          d["total_cost"] = out.total_cost;
          d["found_counter_clockwise"] = out.found_counter_clockwise;
          return d;
        },
        "p"_a, "phi"_a, "exit_phi"_a);

  m.def("critical_params", [](double p) { return lpevac::critical_params(to_p(p)); }, "p"_a);
  m.def("critical_params_branch",
        [](double p, lpevac::Branch branch) { return lpevac::critical_params(to_p(p), branch); }, "p"_a,
        "branch"_a);
  m.def("worst_case_cost", [](double p) { return lpevac::worst_case_cost(to_p(p)); }, "p"_a);
  m.def("worst_case_cost_at",
        [](double p, double phi) { return lpevac::worst_case_cost(lpevac::AlgoParams{to_p(p), phi}); }, "p"_a,
        "phi"_a, "Worst-case cost for deployment angle 0 or pi/4.");
  m.def("worst_case_grid_oracle",
        [](double p, double phi, int n_grid) {
          return lpevac::worst_case_grid_oracle({to_p(p), phi}, n_grid);
        },
        "p"_a, "phi"_a, "n_grid"_a = 4096, "Returns (tau, cost) of the sampled maximum.");

  m.def("min_chord_L", [](double p, double u) { return lpevac::min_chord_L(to_p(p), u); }, "p"_a, "u"_a);
  m.def("sigma", [](double p, double theta, double u) { return lpevac::sigma(to_p(p), theta, u); }, "p"_a,
        "theta"_a, "arc_len"_a);
  m.def("verify_L_monotone",
        [](double p, int grid, double tol) { return lpevac::verify_L_monotone(to_p(p), grid, tol); }, "p"_a,
        "grid_size"_a = 512, "tol"_a = 1e-9);
  m.def("verify_sigma_monotone",
        [](double p, int grid, double tol) { return lpevac::verify_sigma_monotone(to_p(p), grid, tol); },
        "p"_a, "grid_size"_a = 512, "tol"_a = 1e-9);

  m.def("weak_lower_bound", [](double p) { return lpevac::weak_lower_bound(to_p(p)); }, "p"_a);
  m.def("generic_lower_bound", [](double p) { return lpevac::generic_lower_bound(to_p(p)); }, "p"_a);
  m.def("optimality_report", [](double p) { return lpevac::optimality_report(to_p(p)); }, "p"_a);

  m.def("pi_table", [](double lo, double hi, int steps) { return lpevac::cmd_pi(to_p(lo), to_p(hi), steps); },
        "p_min"_a, "p_max"_a, "steps"_a);
  m.def("cost_table",
        [](double lo, double hi, int steps) { return lpevac::cmd_cost(to_p(lo), to_p(hi), steps); }, "p_min"_a,
        "p_max"_a, "steps"_a);
  m.def("profile_table",
        [](double p, double phi, int steps) { return lpevac::cmd_profile(to_p(p), phi, steps); }, "p"_a,
        "phi"_a, "steps"_a);
  m.def("sigma_table",
        [](double p, int steps, std::optional<double> arc_len) {
          return lpevac::cmd_sigma(to_p(p), steps, arc_len);
        },
        "p"_a, "steps"_a, "arc_len"_a = py::none());
  m.def("lchord_table", [](double p, int steps) { return lpevac::cmd_lchord(to_p(p), steps); }, "p"_a,
        "steps"_a);
}
