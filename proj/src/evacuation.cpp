#include "lpevac/evacuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpevac/numerics.hpp"

namespace lpevac {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kSlack = 1e-12;

double clamp_with_slack(double v, double lo, double hi, const char* what) {
  if (!(v >= lo - kSlack && v <= hi + kSlack)) throw DomainError(what);
  return std::clamp(v, lo, hi);
}

void require_smooth(const PExponent& p, const char* what) {
  if (!p.is_smooth()) throw DomainError(std::string(what) + " requires finite p > 1");
}

// Plateau limits for the two piecewise-linear circles (cost 5 = 1 + e/2 + gamma).
CriticalParams degenerate_params(const PExponent& p) {
  CriticalParams out;
  out.p = p;
  out.limit_values = true;
  if (p.is_one()) {
    out.branch = Branch::PHI_0;
    out.s_p = 0.0;
    out.e_p = 24.0 / 5.0;
    out.gamma_p = 8.0 / 5.0;
  } else {
    out.branch = Branch::PHI_QUARTER;
    out.s_p = 1.0;
    out.e_p = 4.0;
    out.gamma_p = 2.0;
  }
  return out;
}

CriticalParams axis_branch(const PExponent& p) {
  const double pv = p.value();
  const UnitCircle& circle = *UnitCircle::shared(p);
  CriticalParams out;
  out.p = p;
  out.branch = Branch::PHI_0;
  // ((2^p - 1)^(1/(p-1)) + 1)^(-1/p) in log form: 2^p - 1 = 1 + 2 (2^(p-1) - 1)
  // keeps accuracy near p = 1 and avoids overflow for large p.
  const double log_inner = std::log1p(2.0 * std::expm1((pv - 1.0) * std::numbers::ln2)) / (pv - 1.0);
  const double s = std::exp(-std::log1p(std::exp(log_inner)) / pv);
  out.s_p = s;
  out.e_p = circle.pi() + 2.0 * circle.chart_arc(s);
  out.gamma_p = 2.0 * circle.companion(s);
  return out;
}

CriticalParams diagonal_branch(const PExponent& p) {
  const double pv = p.value();
  const UnitCircle& circle = *UnitCircle::shared(p);
  const auto a = [pv](double w) { return std::pow(w, pv) + 1.0 - 2.0 * std::pow(1.0 - w, pv); };
  const numerics::Tolerance tol{1e-15, 0.0, 200};
  const double w = numerics::find_root_bracketed(a, 0.0, 1.0, tol).root;

  // With v = w^(p/(p-1)): s^p = 1/(1+v) and the companion coordinate g has
  // g^p = v/(1+v), computed directly instead of through 1 - s^p.
  const double v = std::pow(w, pv / (pv - 1.0));
  const double s = std::pow(1.0 + v, -1.0 / pv);
  const double g = std::pow(v / (1.0 + v), 1.0 / pv);

  CriticalParams out;
  out.p = p;
  out.branch = Branch::PHI_QUARTER;
  out.w_p = w;
  out.s_p = s;
  out.e_p = circle.pi() + 2.0 * (circle.pi() / 4.0 - circle.octant_arc(g));
  out.gamma_p = std::pow(2.0, 1.0 / pv) * (g + s);
  return out;
}

}  // namespace

const char* to_string(Branch branch) {
  return branch == Branch::PHI_0 ? "PHI_0" : "PHI_QUARTER";
}

double CriticalParams::explored_fraction() const { return e_p / (2.0 * pi_p(p)); }

// ---------------------------------------------------------------------------
// WirelessSearch

WirelessSearch::WirelessSearch(const AlgoParams& params) : params_(params) {
  params_.phi = clamp_with_slack(params.phi, 0.0, kQuarterPi, "deployment angle must lie in [0, pi/4]");
  circle_ = UnitCircle::shared(params_.p);
  if (params_.phi == 0.0) {
    deployment_ = Deployment::AXIS;
  } else if (std::abs(params_.phi - kQuarterPi) <= 4e-16) {
    params_.phi = kQuarterPi;
    deployment_ = Deployment::DIAGONAL;
  }
  start_ = deployment_ == Deployment::DIAGONAL ? circle_->pi() / 4.0
                                               : circle_->arc_coordinate(params_.phi);
}

double WirelessSearch::checked_tau(double tau) const {
  return clamp_with_slack(tau, 0.0, circle_->pi(), "search time must lie in [0, pi_p]");
}

std::pair<Point2, Point2> WirelessSearch::robot_positions(double tau) const {
  tau = checked_tau(tau);
  const Point2 ccw = circle_->point_at(start_ + tau).point;
  switch (deployment_) {
    case Deployment::AXIS:
      return {ccw, {ccw.x, -ccw.y}};
    case Deployment::DIAGONAL:
      return {ccw, {ccw.y, ccw.x}};
    case Deployment::GENERAL:
      break;
  }
  return {ccw, circle_->point_at(start_ - tau).point};
}

double WirelessSearch::separation(double tau) const {
  const auto [a, b] = robot_positions(tau);
  switch (deployment_) {
    case Deployment::AXIS:
      return 2.0 * std::abs(a.y);
    case Deployment::DIAGONAL:
      return std::pow(2.0, params_.p.reciprocal()) * std::abs(a.x - a.y);
    case Deployment::GENERAL:
      break;
  }
  return chord_length(params_.p, a, b);
}

double WirelessSearch::evac_time(double tau) const {
  tau = checked_tau(tau);
  return 1.0 + tau + separation(tau);
}

EvacOutcome WirelessSearch::simulate_exit(const CirclePoint& exit) const {
  const double perim = circle_->perimeter();
  double ccw = circle_->arc_coordinate(exit.phi) - start_;
  ccw = std::fmod(ccw, perim);
  if (ccw < 0.0) ccw += perim;
  const double cw = perim - ccw;

  EvacOutcome out;
  out.exit = circle_->rho(exit.phi);
  out.found_counter_clockwise = ccw <= cw;
  out.tau = std::min(std::min(ccw, cw), circle_->pi());
  out.finder_positions = robot_positions(out.tau);
  out.separation = separation(out.tau);
  out.total_cost = 1.0 + out.tau + out.separation;
  return out;
}

std::pair<Point2, Point2> robot_positions(const AlgoParams& params, double tau) {
  return WirelessSearch(params).robot_positions(tau);
}

double separation(const AlgoParams& params, double tau) {
  return WirelessSearch(params).separation(tau);
}

double evac_time(const AlgoParams& params, double tau) {
  return WirelessSearch(params).evac_time(tau);
}

EvacOutcome simulate_exit(const AlgoParams& params, const CirclePoint& exit) {
  return WirelessSearch(params).simulate_exit(exit);
}

// ---------------------------------------------------------------------------
// Worst case

CriticalParams critical_params(const PExponent& p) {
  if (!p.is_smooth()) return degenerate_params(p);
  return critical_params(p, p.value() <= 2.0 ? Branch::PHI_0 : Branch::PHI_QUARTER);
}

CriticalParams critical_params(const PExponent& p, Branch branch) {
  require_smooth(p, "critical_params with an explicit branch");
  return branch == Branch::PHI_0 ? axis_branch(p) : diagonal_branch(p);
}

double worst_case_cost(const PExponent& p) {
  if (!p.is_smooth()) return 5.0;
  return worst_case_cost(AlgoParams{p, p.value() <= 2.0 ? 0.0 : kQuarterPi});
}

double worst_case_cost(const AlgoParams& params) {
  const PExponent& p = params.p;
  const bool axis = params.phi == 0.0;
  const bool diagonal = std::abs(params.phi - kQuarterPi) <= 4e-16;
  if (!axis && !diagonal) {
    throw DomainError("worst_case_cost has closed forms only for phi in {0, pi/4}");
  }
  if (!p.is_smooth()) {
    if ((p.is_one() && axis) || (p.is_infinite() && diagonal)) return 5.0;
    throw DomainError("worst_case_cost: no closed form for this deployment at p = " + p.to_string());
  }
  if (axis) return axis_branch(p).discovery_cost();
  return std::max(diagonal_branch(p).discovery_cost(), 1.0 + pi_p(p));
}

std::pair<double, double> worst_case_grid_oracle(const AlgoParams& params, int n_grid) {
  if (n_grid < 64) throw std::invalid_argument("worst_case_grid_oracle requires n_grid >= 64");
  const WirelessSearch search(params);
  const numerics::Tolerance tol{1e-12, 0.0, 200};
  return numerics::maximize_1d([&search](double tau) { return search.evac_time(tau); }, 0.0,
                               search.circle().pi(), tol, n_grid);
}

double chart_cost(const PExponent& p, double s, ChartCost which) {
  require_smooth(p, "chart_cost");
  const UnitCircle& circle = *UnitCircle::shared(p);
  const double pi = circle.pi();
  const double c = circle.diagonal();
  const double scale = std::pow(2.0, 1.0 / p.value());
  switch (which) {
    case ChartCost::F:
      s = clamp_with_slack(s, 0.0, 1.0, "F is defined on [0, 1]");
      return 1.0 + pi / 2.0 + circle.chart_arc(s) + 2.0 * circle.companion(s);
    case ChartCost::F1:
      s = clamp_with_slack(s, c, 1.0, "F1 is defined on [2^(-1/p), 1]");
      return 1.0 + pi / 2.0 + (circle.chart_arc(s) - pi / 4.0) + scale * (circle.companion(s) + s);
    case ChartCost::F2: {
      s = clamp_with_slack(s, -1.0, -c, "F2 is defined on [-1, -2^(-1/p)]");
      const double z = -s;
      // Arc from (-1, 0) onward mirrors the chart arc from z to 1.
      const double arc = pi / 2.0 - circle.chart_arc(z);
      return 1.0 + 3.0 * pi / 4.0 + arc - scale * (circle.companion(z) + s);
    }
  }
  throw std::logic_error("unknown chart cost function");
}

}  // namespace lpevac
