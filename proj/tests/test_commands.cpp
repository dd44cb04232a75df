#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "lpevac/commands.hpp"

using lpevac::PExponent;
using lpevac::UsageError;

namespace {

constexpr double kPi = std::numbers::pi;
PExponent P(double p) { return PExponent::finite(p); }

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

TEST(ParseP, NumbersAndInfinity) {
  EXPECT_EQ(lpevac::parse_p("2").value(), 2.0);
  EXPECT_EQ(lpevac::parse_p("1").value(), 1.0);
  EXPECT_TRUE(lpevac::parse_p("inf").is_infinite());
  EXPECT_THROW(lpevac::parse_p("0.5"), UsageError);
  EXPECT_THROW(lpevac::parse_p("two"), UsageError);
  EXPECT_THROW(lpevac::parse_p("nan"), UsageError);
}

TEST(ParseAngle, MultiplesOfPi) {
  EXPECT_EQ(lpevac::parse_angle("pi"), kPi);
  EXPECT_EQ(lpevac::parse_angle("pi/4"), kPi / 4.0);
  EXPECT_EQ(lpevac::parse_angle("pi/2"), kPi / 2.0);
  EXPECT_EQ(lpevac::parse_angle("3pi/4"), 3.0 * kPi / 4.0);
  EXPECT_EQ(lpevac::parse_angle("5*pi/4"), 5.0 * kPi / 4.0);
  EXPECT_EQ(lpevac::parse_angle("-pi/2"), -kPi / 2.0);
  EXPECT_EQ(lpevac::parse_angle("0.25"), 0.25);
  EXPECT_THROW(lpevac::parse_angle("pi/0"), UsageError);
  EXPECT_THROW(lpevac::parse_angle("tau"), UsageError);
  EXPECT_THROW(lpevac::parse_angle("inf"), UsageError);
}

TEST(PGrid, EndpointsAndStepRules) {
  const auto grid = lpevac::p_grid(P(1.0), P(2.0), 5);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_EQ(grid.front().value(), 1.0);
  EXPECT_EQ(grid.back().value(), 2.0);
  EXPECT_EQ(grid[2].value(), 1.5);
  EXPECT_EQ(lpevac::p_grid(P(3.0), P(3.0), 1).size(), 1u);
  EXPECT_THROW(lpevac::p_grid(P(1.0), P(2.0), 1), UsageError);
  EXPECT_THROW(lpevac::p_grid(P(3.0), P(2.0), 10), UsageError);
  EXPECT_EQ(lpevac::p_grid(PExponent::infinity(), PExponent::infinity(), 1).size(), 1u);
  EXPECT_THROW(lpevac::p_grid(P(2.0), PExponent::infinity(), 10), UsageError);
}

TEST(CmdPi, SinglePointAndEuclideanMinimum) {
  const auto one = lpevac::cmd_pi(P(1.0), P(1.0), 1);
  ASSERT_EQ(one.rows().size(), 1u);
  EXPECT_EQ(one.rows()[0], (std::vector<double>{1.0, 4.0}));

  const auto table = lpevac::cmd_pi(P(1.0), P(4.0), 61);
  const auto ps = table.column("p");
  const auto pis = table.column("pi_p");
  EXPECT_EQ(ps[20], 2.0);
  EXPECT_NEAR(pis[20], kPi, 1e-12);
  EXPECT_EQ(argmin(pis), 20u);
  EXPECT_EQ(table.metadata().at("command"), "pi");
  EXPECT_EQ(table.metadata().at("steps"), "61");
}

TEST(CmdCost, EuclideanRow) {
  const auto table = lpevac::cmd_cost(P(2.0), P(2.0), 1);
  ASSERT_EQ(table.rows().size(), 1u);
  const auto& row = table.rows()[0];
  EXPECT_NEAR(row[1], 4.826445, 1e-5);
  EXPECT_NEAR(row[2], 1.0 + kPi, 1e-12);
  EXPECT_NEAR(row[3], row[1], 1e-9);
  EXPECT_NEAR(row[7], 2.0 / 3.0, 1e-6);
}

TEST(CmdCost, LocalMinimumBelowTwo) {
  const auto table = lpevac::cmd_cost(P(1.50), P(1.56), 13);
  const auto upper = table.column("upper_cost");
  const std::size_t best = argmin(upper);
  EXPECT_NEAR(upper[best], 4.7544, 1e-3);
  EXPECT_NEAR(table.column("p")[best], 1.5328, 5e-3);
}

TEST(CmdCost, LocalMinimumAboveTwo) {
  const auto table = lpevac::cmd_cost(P(2.60), P(2.80), 21);
  const auto upper = table.column("upper_cost");
  const std::size_t best = argmin(upper);
  EXPECT_NEAR(upper[best], 4.7784, 1e-3);
  EXPECT_NEAR(table.column("p")[best], 2.6930, 1e-2);
}

TEST(CmdProfile, DiamondPlateauAndEuclideanPeak) {
  const auto diamond = lpevac::cmd_profile(P(1.0), 0.0, 401);
  const auto tau = diamond.column("tau");
  const auto time = diamond.column("evac_time");
  EXPECT_EQ(time.front(), 1.0);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] >= 2.0 && tau[i] <= 4.0) {
      EXPECT_NEAR(time[i], 5.0, 1e-9) << "tau=" << tau[i];
    }
  }

  const auto round = lpevac::cmd_profile(P(2.0), 0.0, 3001);
  const auto peak = round.column("evac_time");
  EXPECT_NEAR(*std::max_element(peak.begin(), peak.end()), 4.826445, 1e-5);
}

TEST(CmdProfile, OnlyCanonicalDeployments) {
  EXPECT_NO_THROW(lpevac::cmd_profile(P(3.0), kPi / 4.0, 10));
  EXPECT_THROW(lpevac::cmd_profile(P(3.0), 0.3, 10), UsageError);
  EXPECT_THROW(lpevac::cmd_profile(P(3.0), 0.0, 1), UsageError);
}

TEST(CmdSigma, ShapeFollowsP) {
  const auto flat = lpevac::cmd_sigma(P(2.0), 50).column("sigma");
  for (double v : flat) EXPECT_NEAR(v, std::sqrt(3.0), 1e-6);

  const auto rising = lpevac::cmd_sigma(P(1.5), 50).column("sigma");
  EXPECT_TRUE(std::is_sorted(rising.begin(), rising.end()));
  const auto falling = lpevac::cmd_sigma(P(3.0), 50).column("sigma");
  EXPECT_TRUE(std::is_sorted(falling.rbegin(), falling.rend()));

  const auto table = lpevac::cmd_sigma(P(2.0), 5, 4.0 * kPi / 3.0);
  EXPECT_EQ(table.metadata().at("arc_len_source"), "argument");
  EXPECT_THROW(lpevac::cmd_sigma(P(2.0), 5, 7.0), UsageError);
}

TEST(CmdLchord, EuclideanColumn) {
  const auto table = lpevac::cmd_lchord(P(2.0), 33);
  const auto u = table.column("u");
  const auto l = table.column("L");
  EXPECT_NEAR(u.back(), kPi, 1e-12);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(l[i], 2.0 * std::sin(u[i] / 2.0), 1e-12);
}

TEST(CmdVerify, ReportsEveryCheck) {
  lpevac::VerifyOptions options;
  options.ps = {P(2.0)};
  options.grid = 128;
  const auto result = lpevac::cmd_verify(options);
  EXPECT_TRUE(result.all_passed);
  EXPECT_TRUE(result.warnings.empty());
  const auto doc = nlohmann::json::parse(result.json);
  ASSERT_EQ(doc["results"].size(), 1u);
  const auto& row = doc["results"][0];
  EXPECT_EQ(row["sigma_monotone"]["direction"], "CONSTANT");
  EXPECT_TRUE(row["L_monotone"]["passed"].get<bool>());
  EXPECT_TRUE(row["optimality_gap"]["passed"].get<bool>());
  EXPECT_TRUE(doc["all_passed"].get<bool>());
}

TEST(CmdVerify, FailsOnImpossibleTolerances) {
  lpevac::VerifyOptions options;
  options.ps = {P(1.5)};
  options.grid = 64;
  options.gap_tol = 0.0;
  options.chord_tol = 0.0;
  EXPECT_FALSE(lpevac::cmd_verify(options).all_passed);
}

TEST(CmdVerify, UsageErrors) {
  EXPECT_THROW(lpevac::cmd_verify({}), UsageError);
  lpevac::VerifyOptions options;
  options.ps = {P(1.5)};
  options.grid = 8;
  EXPECT_THROW(lpevac::cmd_verify(options), std::invalid_argument);
}

TEST(CmdVerify, WarnsOutsideValidatedRange) {
  lpevac::VerifyOptions options;
  options.ps = {P(60.0)};
  options.grid = 64;
  const auto result = lpevac::cmd_verify(options);
  EXPECT_FALSE(result.warnings.empty());
}

TEST(CmdSimulate, KnownCosts) {
  const auto six = nlohmann::json::parse(lpevac::cmd_simulate(P(1.0), kPi / 4.0, kPi));
  EXPECT_NEAR(six["total_cost"].get<double>(), 6.0, 1e-12);
  EXPECT_NEAR(six["exit"]["x"].get<double>(), -1.0, 1e-15);

  const auto home = nlohmann::json::parse(lpevac::cmd_simulate(P(3.0), 0.5, 0.5));
  EXPECT_NEAR(home["total_cost"].get<double>(), 1.0, 1e-12);

  const auto square = nlohmann::json::parse(lpevac::cmd_simulate(PExponent::infinity(), kPi / 4.0, 1.25 * kPi));
  EXPECT_NEAR(square["total_cost"].get<double>(), 5.0, 1e-12);
  EXPECT_EQ(square["p"], "inf");

  EXPECT_THROW(lpevac::cmd_simulate(P(2.0), 1.0, 0.0), std::invalid_argument);
}

TEST(CmdParams, EuclideanAndLimit) {
  const auto doc = nlohmann::json::parse(lpevac::cmd_params(P(2.0)));
  EXPECT_EQ(doc["branch"], "PHI_0");
  EXPECT_TRUE(doc["w_p"].is_null());
  EXPECT_NEAR(doc["e_p"].get<double>(), 4.0 * kPi / 3.0, 1e-8);
  EXPECT_NEAR(doc["explored_fraction"].get<double>(), 2.0 / 3.0, 1e-8);

  const auto above = nlohmann::json::parse(lpevac::cmd_params(P(3.0)));
  EXPECT_EQ(above["branch"], "PHI_QUARTER");
  EXPECT_NEAR(above["w_p"].get<double>(), 0.20405781723545581263, 1e-12);

  const auto inf = nlohmann::json::parse(lpevac::cmd_params(PExponent::infinity()));
  EXPECT_TRUE(inf["limit_values"].get<bool>());
  EXPECT_EQ(inf["worst_case_cost"].get<double>(), 5.0);
}

TEST(Commands, TablesAreDeterministic) {
  EXPECT_EQ(lpevac::cmd_cost(P(1.2), P(3.0), 7).to_csv(), lpevac::cmd_cost(P(1.2), P(3.0), 7).to_csv());
  EXPECT_EQ(lpevac::cmd_sigma(P(4.0), 17).to_json(), lpevac::cmd_sigma(P(4.0), 17).to_json());
}

TEST(Commands, MetadataStamp) {
  const auto table = lpevac::cmd_lchord(P(1.5), 4);
  EXPECT_EQ(table.metadata().at("tool"), "lpevac");
  EXPECT_EQ(table.metadata().at("format_version"), std::to_string(lpevac::kTableFormatVersion));
  EXPECT_EQ(table.metadata().at("p"), "1.5");
  const auto back = lpevac::CurveTable::from_csv(table.to_csv());
  EXPECT_EQ(back.metadata(), table.metadata());
}
