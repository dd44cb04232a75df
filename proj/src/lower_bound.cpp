#include "lpevac/lower_bound.hpp"

#include "lpevac/chord_arc.hpp"
#include "lpevac/evacuation.hpp"

namespace lpevac {

double weak_lower_bound(const PExponent& p) { return 1.0 + pi_p(p); }

double generic_lower_bound(const PExponent& p) {
  if (!p.is_smooth()) throw DomainError("generic_lower_bound requires finite p > 1");
  const double e = critical_params(p).e_p;
  return 1.0 + 0.5 * e + min_chord_L(p, e);
}

OptimalityReport optimality_report(const PExponent& p) {
  OptimalityReport report;
  report.p = p;
  report.upper = worst_case_cost(p);
  report.weak_lower = weak_lower_bound(p);
  report.generic_substituted = !p.is_smooth() || p.value() > kGenericBoundMaxP;
  report.generic_lower = report.generic_substituted ? report.weak_lower : generic_lower_bound(p);
  report.gap = report.upper - report.generic_lower;
  return report;
}

}  // namespace lpevac
