#ifndef LPEVAC_CHORD_ARC_HPP
#define LPEVAC_CHORD_ARC_HPP

#include <memory>
#include <vector>

#include "lpevac/lp_geometry.hpp"

namespace lpevac {

/// A chord of an arc given by its tangential angle (the angle of its midpoint).
struct ChordArcSample {
  double theta = 0.0;
  double chord = 0.0;
  double arc_len = 0.0;
};

enum class Direction { INCREASING, DECREASING, CONSTANT };

const char* to_string(Direction direction);

struct MonotonicityReport {
  PExponent p = PExponent::finite(2.0);
  int grid_size = 0;
  Direction direction = Direction::INCREASING;
  /// Largest step against `direction`; for CONSTANT the range of the samples.
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Chord between rho(arc.start_phi) and the point at arc length arc.length.
double chord_of_arc(const PExponent& p, const ArcSpec& arc);

/// Chord of the arc of length arc_len centred at rho_p(theta), theta in [0, pi/4].
double sigma(const PExponent& p, double theta, double arc_len);

/// Minimum chord over all arcs of one length.
///
/// By the symmetries of the circle only midpoints with theta in [0, pi/4]
/// need to be searched. The solver samples a fixed theta grid (arc
/// coordinates of the grid are computed once) and refines the best cell
/// with golden-section search. Among equal minima the smallest theta wins.
class MinChordSolver {
 public:
  static constexpr int kDefaultThetaGrid = 512;

  explicit MinChordSolver(const PExponent& p, int theta_grid = kDefaultThetaGrid);

  const UnitCircle& circle() const noexcept { return *circle_; }

  /// Chord of the arc of length u centred at arc coordinate `centre`.
  double chord_at(double centre, double u) const;
  double sigma(double theta, double u) const;
  /// L_p(u) with its minimizing tangential angle; u in [0, 2 pi_p).
  ChordArcSample minimize(double u) const;
  double value(double u) const { return minimize(u).chord; }

 private:
  std::shared_ptr<const UnitCircle> circle_;
  std::vector<double> thetas_;
  std::vector<double> centres_;
};

/// L_p(u): minimum l_p chord over arcs of length u in [0, 2 pi_p).
double min_chord_L(const PExponent& p, double u);
ChordArcSample min_chord_sample(const PExponent& p, double u);

/// Samples L_p on a uniform grid over [0, pi_p] and checks it never decreases
/// by more than tol between neighbours.
MonotonicityReport verify_L_monotone(const PExponent& p, int grid_size, double tol);

/// Samples sigma_p(theta, e_p) over theta in [0, pi/4]. Expected increasing
/// for p < 2, decreasing for p > 2, and constant (range <= tol) at p = 2.
MonotonicityReport verify_sigma_monotone(const PExponent& p, int grid_size, double tol);

}  // namespace lpevac

#endif  // LPEVAC_CHORD_ARC_HPP
