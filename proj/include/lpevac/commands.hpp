#ifndef LPEVAC_COMMANDS_HPP
#define LPEVAC_COMMANDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpevac/curve_table.hpp"
#include "lpevac/lp_geometry.hpp"

namespace lpevac {

/// Version of the CSV/JSON table layout written by the commands.
inline constexpr int kTableFormatVersion = 1;

/// Bad command-line input; the tool exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "inf" or a decimal p >= 1.
PExponent parse_p(const std::string& text);
/// Radians as a decimal, or a multiple of pi such as "pi", "pi/4", "3pi/4",
/// "5*pi/4", "-pi/2".
double parse_angle(const std::string& text);

/// Uniform p grid with both endpoints. steps must be >= 2, or 1 when
/// p_min == p_max. Infinite endpoints are allowed only as a single point.
std::vector<PExponent> p_grid(const PExponent& p_min, const PExponent& p_max, int steps);

/// Columns (p, pi_p).
CurveTable cmd_pi(const PExponent& p_min, const PExponent& p_max, int steps);
/// Columns (p, upper_cost, weak_lower, generic_lower, gap, e_p, gamma_p, explored_fraction).
CurveTable cmd_cost(const PExponent& p_min, const PExponent& p_max, int steps);
/// Columns (tau, delta, evac_time) over tau in [0, pi_p]; phi must be 0 or pi/4.
CurveTable cmd_profile(const PExponent& p, double phi, int steps);
/// Columns (theta, sigma) over theta in [0, pi/4]; arc_len defaults to e_p.
CurveTable cmd_sigma(const PExponent& p, int steps, std::optional<double> arc_len = std::nullopt);
/// Columns (u, L) over u in [0, pi_p].
CurveTable cmd_lchord(const PExponent& p, int steps);

struct VerifyOptions {
  std::vector<PExponent> ps;
  int grid = 512;
  /// Monotonicity tolerance.
  double tol = 1e-9;
  /// Allowed |upper - generic_lower|.
  double gap_tol = 1e-4;
  /// Allowed |L_p(e_p) - gamma_p|.
  double chord_tol = 1e-5;
};

struct VerifyResult {
  bool all_passed = false;
  std::string json;
  /// Human-readable notes, such as p outside the validated range.
  std::vector<std::string> warnings;
};

inline constexpr double kVerifyMinP = 1.001;
inline constexpr double kVerifyMaxP = 45.0;

VerifyResult cmd_verify(const VerifyOptions& options);

/// JSON description of the outcome for an exit at rho_p(exit_phi).
std::string cmd_simulate(const PExponent& p, double phi, double exit_phi);
/// JSON description of the critical parameters for p.
std::string cmd_params(const PExponent& p);

}  // namespace lpevac

#endif  // LPEVAC_COMMANDS_HPP
