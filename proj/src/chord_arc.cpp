#include "lpevac/chord_arc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpevac/evacuation.hpp"
#include "lpevac/numerics.hpp"

namespace lpevac {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
// Two samples closer than this count as the same minimum.
constexpr double kTieTolerance = 1e-13;

void require_grid(int grid_size) {
  if (grid_size < 64) throw std::invalid_argument("monotonicity checks need grid_size >= 64");
}

}  // namespace

const char* to_string(Direction direction) {
  switch (direction) {
    case Direction::INCREASING:
      return "INCREASING";
    case Direction::DECREASING:
      return "DECREASING";
    case Direction::CONSTANT:
      return "CONSTANT";
  }
  return "UNKNOWN";
}

double chord_of_arc(const PExponent& p, const ArcSpec& arc) {
  const auto circle = UnitCircle::shared(p);
  if (!(arc.length >= 0.0 && arc.length < circle->perimeter())) {
    throw DomainError("chord_of_arc requires length in [0, 2 pi_p)");
  }
  const CirclePoint a = circle->rho(arc.start_phi);
  const CirclePoint b = circle->invert_arc_length(arc.start_phi, arc.length);
  return chord_length(p, a.point, b.point);
}

// ---------------------------------------------------------------------------
// MinChordSolver

MinChordSolver::MinChordSolver(const PExponent& p, int theta_grid)
    : circle_(UnitCircle::shared(p)) {
  if (theta_grid < 2) throw std::invalid_argument("MinChordSolver needs at least 2 grid angles");
  thetas_.resize(theta_grid);
  centres_.resize(theta_grid);
  for (int i = 0; i < theta_grid; ++i) {
    thetas_[i] = i + 1 == theta_grid ? kQuarterPi : kQuarterPi * i / (theta_grid - 1);
    centres_[i] = circle_->arc_coordinate(thetas_[i]);
  }
  // The diagonal has an exact arc coordinate.
  centres_.back() = circle_->pi() / 4.0;
}

double MinChordSolver::chord_at(double centre, double u) const {
  const double half = 0.5 * u;
  const Point2 a = circle_->point_at(centre - half).point;
  const Point2 b = circle_->point_at(centre + half).point;
  return chord_length(circle_->p(), a, b);
}

double MinChordSolver::sigma(double theta, double u) const {
  if (!(theta >= 0.0 && theta <= kQuarterPi)) {
    throw DomainError("tangential angle must lie in [0, pi/4]");
  }
  if (!(u > 0.0 && u < circle_->perimeter())) {
    throw DomainError("arc length must lie in (0, 2 pi_p)");
  }
  const double centre = theta == kQuarterPi ? circle_->pi() / 4.0 : circle_->arc_coordinate(theta);
  return chord_at(centre, u);
}

ChordArcSample MinChordSolver::minimize(double u) const {
  const double perim = circle_->perimeter();
  if (!(u >= 0.0 && u < perim)) throw DomainError("min_chord_L requires u in [0, 2 pi_p)");
  if (u == 0.0) return {0.0, 0.0, 0.0};
  // An arc and its complement share their chord.
  const double v = u > circle_->pi() ? perim - u : u;

  const std::size_t n = thetas_.size();
  std::vector<double> values(n);
  double best_value = chord_at(centres_[0], v);
  values[0] = best_value;
  for (std::size_t i = 1; i < n; ++i) {
    values[i] = chord_at(centres_[i], v);
    best_value = std::min(best_value, values[i]);
  }
  std::size_t best = 0;
  while (values[best] > best_value + kTieTolerance) ++best;

  const double lo = thetas_[best == 0 ? 0 : best - 1];
  const double hi = thetas_[std::min(best + 1, n - 1)];
  const numerics::Tolerance tol{1e-12, 0.0, 200};
  const auto refined = numerics::golden_section_maximize(
      [this, v](double theta) { return -chord_at(circle_->arc_coordinate(theta), v); }, lo, hi, tol);
  if (-refined.second < values[best] - kTieTolerance) {
    return {refined.first, -refined.second, u};
  }
  return {thetas_[best], values[best], u};
}

double min_chord_L(const PExponent& p, double u) { return MinChordSolver(p).value(u); }

ChordArcSample min_chord_sample(const PExponent& p, double u) {
  return MinChordSolver(p).minimize(u);
}

double sigma(const PExponent& p, double theta, double arc_len) {
  return MinChordSolver(p, 2).sigma(theta, arc_len);
}

// ---------------------------------------------------------------------------
// Monotonicity certificates

MonotonicityReport verify_L_monotone(const PExponent& p, int grid_size, double tol) {
  require_grid(grid_size);
  const MinChordSolver solver(p);
  const double pi = solver.circle().pi();

  MonotonicityReport report;
  report.p = p;
  report.grid_size = grid_size;
  report.direction = Direction::INCREASING;
  report.tolerance = tol;

  double previous = 0.0;
  for (int i = 1; i < grid_size; ++i) {
    const double u = i + 1 == grid_size ? pi : pi * i / (grid_size - 1);
    const double value = solver.value(u);
    report.max_violation = std::max(report.max_violation, previous - value);
    previous = value;
  }
  report.passed = report.max_violation <= tol;
  return report;
}

MonotonicityReport verify_sigma_monotone(const PExponent& p, int grid_size, double tol) {
  require_grid(grid_size);
  const MinChordSolver solver(p, 2);
  const double e = critical_params(p).e_p;

  MonotonicityReport report;
  report.p = p;
  report.grid_size = grid_size;
  report.tolerance = tol;
  if (p.is_smooth() && p.value() == 2.0) {
    report.direction = Direction::CONSTANT;
  } else if (p.is_infinite() || p.value() > 2.0) {
    report.direction = Direction::DECREASING;
  } else {
    report.direction = Direction::INCREASING;
  }

  std::vector<double> values(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double theta = i + 1 == grid_size ? kQuarterPi : kQuarterPi * i / (grid_size - 1);
    values[i] = solver.sigma(theta, e);
  }
  if (report.direction == Direction::CONSTANT) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    report.max_violation = *hi - *lo;
  } else {
    const double sign = report.direction == Direction::INCREASING ? 1.0 : -1.0;
    for (int i = 1; i < grid_size; ++i) {
      report.max_violation = std::max(report.max_violation, sign * (values[i - 1] - values[i]));
    }
  }
  report.passed = report.max_violation <= tol;
  return report;
}

}  // namespace lpevac
