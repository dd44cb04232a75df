#include <gtest/gtest.h>

#include <cmath>

#include "lpevac/evacuation.hpp"
#include "lpevac/lower_bound.hpp"

using lpevac::PExponent;

namespace {
PExponent P(double p) { return PExponent::finite(p); }
}  // namespace

TEST(WeakBound, OnePlusHalfPerimeter) {
  EXPECT_NEAR(lpevac::weak_lower_bound(P(2.0)), 1.0 + std::numbers::pi, 1e-12);
  EXPECT_EQ(lpevac::weak_lower_bound(P(1.0)), 5.0);
  EXPECT_EQ(lpevac::weak_lower_bound(PExponent::infinity()), 5.0);
}

TEST(GenericBound, DominatesWeakBound) {
  for (double p : {1.05, 1.3, 1.5, 2.0, 2.5, 4.0, 10.0, 30.0, 45.0}) {
    EXPECT_GE(lpevac::generic_lower_bound(P(p)), lpevac::weak_lower_bound(P(p)) - 1e-12) << "p=" << p;
  }
}

TEST(GenericBound, RequiresSmoothCircle) {
  EXPECT_THROW(lpevac::generic_lower_bound(P(1.0)), lpevac::DomainError);
  EXPECT_THROW(lpevac::generic_lower_bound(PExponent::infinity()), lpevac::DomainError);
}

TEST(OptimalityReport, GapClosesOnValidatedRange) {
  for (double p : {1.001, 1.1, 1.5, 1.9, 2.0, 2.1, 3.0, 6.0, 12.0, 25.0, 45.0}) {
    const auto report = lpevac::optimality_report(P(p));
    EXPECT_FALSE(report.generic_substituted);
    EXPECT_LE(std::abs(report.gap), 1e-4) << "p=" << p;
    EXPECT_DOUBLE_EQ(report.gap, report.upper - report.generic_lower);
    EXPECT_GE(report.upper, report.weak_lower);
  }
}

TEST(OptimalityReport, FallsBackToWeakBound) {
  for (const auto& p : {P(1.0), P(46.0), P(1000.0), PExponent::infinity()}) {
    const auto report = lpevac::optimality_report(p);
    EXPECT_TRUE(report.generic_substituted) << p.to_string();
    EXPECT_EQ(report.generic_lower, report.weak_lower);
  }
  const auto one = lpevac::optimality_report(P(1.0));
  EXPECT_EQ(one.upper, 5.0);
  EXPECT_EQ(one.gap, 0.0);
}

TEST(OptimalityReport, LargeP) {
  const auto report = lpevac::optimality_report(P(1000.0));
  EXPECT_NEAR(report.upper, 4.9993023351, 1e-5);
  EXPECT_NEAR(report.weak_lower, 1.0 + lpevac::pi_p(P(1000.0)), 1e-15);
  EXPECT_GT(report.gap, 0.0);
}
