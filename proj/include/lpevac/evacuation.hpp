#ifndef LPEVAC_EVACUATION_HPP
#define LPEVAC_EVACUATION_HPP

#include <memory>
#include <optional>
#include <utility>

#include "lpevac/lp_geometry.hpp"

namespace lpevac {

/// Wireless two-robot search started at rho_p(phi), phi in [0, pi/4].
struct AlgoParams {
  PExponent p = PExponent::finite(2.0);
  double phi = 0.0;
};

struct EvacOutcome {
  CirclePoint exit;
  /// Perimeter search time until the exit is found, in [0, pi_p].
  double tau = 0.0;
  /// (counter-clockwise robot, clockwise robot) at the moment of discovery.
  std::pair<Point2, Point2> finder_positions;
  double separation = 0.0;
  /// 1 + tau + separation.
  double total_cost = 0.0;
  /// True when the counter-clockwise robot found the exit.
  bool found_counter_clockwise = true;
};

enum class Branch { PHI_0, PHI_QUARTER };

const char* to_string(Branch branch);

/// Worst-case exit data of one deployment.
///
/// For p in {1, inf} the worst case is attained on a whole plateau of exits;
/// the reported e_p and gamma_p are then the limits of the smooth family and
/// `limit_values` is set.
struct CriticalParams {
  PExponent p = PExponent::finite(2.0);
  std::optional<double> w_p;
  double s_p = 0.0;
  /// Arc measure explored when the worst-case exit is found.
  double e_p = 0.0;
  /// Robot separation at that moment.
  double gamma_p = 0.0;
  Branch branch = Branch::PHI_0;
  bool limit_values = false;

  /// 1 + e_p / 2 + gamma_p.
  double discovery_cost() const { return 1.0 + 0.5 * e_p + gamma_p; }
  double explored_fraction() const;
};

enum class ChartCost { F, F1, F2 };

/// Precomputed state for one (p, phi): evaluates positions and costs along
/// the search without repeated circle lookups.
class WirelessSearch {
 public:
  explicit WirelessSearch(const AlgoParams& params);

  const AlgoParams& params() const noexcept { return params_; }
  const UnitCircle& circle() const noexcept { return *circle_; }

  std::pair<Point2, Point2> robot_positions(double tau) const;
  double separation(double tau) const;
  double evac_time(double tau) const;
  EvacOutcome simulate_exit(const CirclePoint& exit) const;

 private:
  enum class Deployment { AXIS, DIAGONAL, GENERAL };

  double checked_tau(double tau) const;

  AlgoParams params_;
  std::shared_ptr<const UnitCircle> circle_;
  double start_ = 0.0;  // arc coordinate of rho_p(phi)
  Deployment deployment_ = Deployment::GENERAL;
};

std::pair<Point2, Point2> robot_positions(const AlgoParams& params, double tau);
double separation(const AlgoParams& params, double tau);
double evac_time(const AlgoParams& params, double tau);
EvacOutcome simulate_exit(const AlgoParams& params, const CirclePoint& exit);

/// Branch PHI_0 for p <= 2, PHI_QUARTER above.
CriticalParams critical_params(const PExponent& p);
/// Critical data of a given branch; p must be finite and > 1.
CriticalParams critical_params(const PExponent& p, Branch branch);

/// Worst-case cost of the better deployment for p; exactly 5 for p in {1, inf}.
double worst_case_cost(const PExponent& p);
/// Worst-case cost of deployment phi in {0, pi/4} for finite p > 1, or the
/// plateau deployments (1, 0) and (inf, pi/4). Other inputs throw DomainError.
double worst_case_cost(const AlgoParams& params);

/// Brute-force maximum of evac_time over tau in [0, pi_p]: (tau*, cost*).
std::pair<double, double> worst_case_grid_oracle(const AlgoParams& params, int n_grid);

/// Cost as a function of the chart coordinate s of the exit:
///   F  on [0, 1]            (deployment at angle 0),
///   F1 on [2^(-1/p), 1]     (deployment at pi/4, exit before the axis),
///   F2 on [-1, -2^(-1/p)]   (deployment at pi/4, exit past the axis).
double chart_cost(const PExponent& p, double s, ChartCost which);

}  // namespace lpevac

#endif  // LPEVAC_EVACUATION_HPP
