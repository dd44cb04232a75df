#ifndef LPEVAC_LOWER_BOUND_HPP
#define LPEVAC_LOWER_BOUND_HPP

#include "lpevac/lp_geometry.hpp"

namespace lpevac {

/// Above this p the chord minimization is not trusted and the report falls
/// back to the weak bound.
inline constexpr double kGenericBoundMaxP = 45.0;

struct OptimalityReport {
  PExponent p = PExponent::finite(2.0);
  double upper = 0.0;
  double weak_lower = 0.0;
  double generic_lower = 0.0;
  /// upper - generic_lower.
  double gap = 0.0;
  /// True when generic_lower holds the weak bound instead of the chord bound.
  bool generic_substituted = false;
};

/// 1 + pi_p.
double weak_lower_bound(const PExponent& p);

/// 1 + e_p / 2 + L_p(e_p) for finite p > 1.
double generic_lower_bound(const PExponent& p);

OptimalityReport optimality_report(const PExponent& p);

}  // namespace lpevac

#endif  // LPEVAC_LOWER_BOUND_HPP
