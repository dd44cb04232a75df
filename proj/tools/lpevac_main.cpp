// lpevac: command-line front end for the evacuation library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpevac/commands.hpp"
#include "lpevac/lp_geometry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "csv";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw lpevac::UsageError("cannot open output file '" + path + "'");
    file << text;
  }

  void write(const lpevac::CurveTable& table) const {
    write(format == "json" ? table.to_json() : table.to_csv());
  }
};

void warn_large_p(const lpevac::PExponent& p) {
  if (lpevac::large_p_warning(p)) {
    std::cerr << "warning: p = " << p.to_string() << " exceeds " << lpevac::kLargePThreshold
              << "; results may lose precision\n";
  }
}

// Splits "1.5,3" style lists so --p may be repeated or comma separated.
std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream in(item);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      if (!piece.empty()) out.push_back(piece);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-robot wireless evacuation on l_p unit circles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("lpevac ") + LPEVAC_VERSION + " (table format " +
                                        std::to_string(lpevac::kTableFormatVersion) + ")");

  Output output;
  app.add_option("--format", output.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", output.path, "Write output to FILE instead of stdout");

  std::string p_min = "1";
  std::string p_max = "4";
  std::string p_text = "2";
  std::string phi_text = "0";
  std::string exit_text = "pi";
  std::string arc_text;
  int steps = 200;
  int grid = 512;
  double tol = 1e-9;
  double gap_tol = 1e-4;
  double chord_tol = 1e-5;
  std::vector<std::string> p_list;

  auto* pi_cmd = app.add_subcommand("pi", "Half perimeter pi_p over a p range");
  auto* cost_cmd = app.add_subcommand("cost", "Worst-case cost and lower bounds over a p range");
  for (auto* cmd : {pi_cmd, cost_cmd}) {
    cmd->add_option("--p-min", p_min, "Smallest p")->capture_default_str();
    cmd->add_option("--p-max", p_max, "Largest p")->capture_default_str();
    cmd->add_option("--steps", steps, "Number of grid points")->capture_default_str();
  }

  auto* profile_cmd = app.add_subcommand("profile", "Evacuation time against search time");
  profile_cmd->add_option("--p", p_text, "Norm exponent, or inf")->capture_default_str();
  profile_cmd->add_option("--phi", phi_text, "Deployment angle: 0 or pi/4")->capture_default_str();
  profile_cmd->add_option("--steps", steps, "Number of samples")->capture_default_str();

  auto* sigma_cmd = app.add_subcommand("sigma", "Chord length against tangential angle");
  sigma_cmd->add_option("--p", p_text, "Norm exponent, or inf")->capture_default_str();
  sigma_cmd->add_option("--steps", steps, "Number of samples")->capture_default_str();
  sigma_cmd->add_option("--arc-len", arc_text, "Arc length (default: e_p)");

  auto* lchord_cmd = app.add_subcommand("lchord", "Minimum chord L_p(u) for u in [0, pi_p]");
  lchord_cmd->add_option("--p", p_text, "Norm exponent, or inf")->capture_default_str();
  lchord_cmd->add_option("--steps", steps, "Number of samples")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the monotonicity and optimality checks");
  verify_cmd->add_option("--p", p_list, "Exponents to check (repeatable or comma separated)");
  verify_cmd->add_option("--grid", grid, "Grid size of the monotonicity checks")->capture_default_str();
  verify_cmd->add_option("--tol", tol, "Monotonicity tolerance")->capture_default_str();
  verify_cmd->add_option("--gap-tol", gap_tol, "Optimality gap tolerance")->capture_default_str();
  verify_cmd->add_option("--chord-tol", chord_tol, "Tolerance of L_p(e_p) = gamma_p")
      ->capture_default_str();

  auto* simulate_cmd = app.add_subcommand("simulate", "Outcome for one exit position (JSON)");
  simulate_cmd->add_option("--p", p_text, "Norm exponent, or inf")->capture_default_str();
  simulate_cmd->add_option("--phi", phi_text, "Deployment angle in [0, pi/4]")->capture_default_str();
  simulate_cmd->add_option("--exit-phi", exit_text, "Angle of the exit")->capture_default_str();

  auto* params_cmd = app.add_subcommand("params", "Critical parameters for one p (JSON)");
  params_cmd->add_option("--p", p_text, "Norm exponent, or inf")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pi_cmd->parsed() || cost_cmd->parsed()) {
      const auto lo = lpevac::parse_p(p_min);
      const auto hi = lpevac::parse_p(p_max);
      warn_large_p(hi);
      output.write(pi_cmd->parsed() ? lpevac::cmd_pi(lo, hi, steps) : lpevac::cmd_cost(lo, hi, steps));
    } else if (profile_cmd->parsed()) {
      const auto p = lpevac::parse_p(p_text);
      warn_large_p(p);
      output.write(lpevac::cmd_profile(p, lpevac::parse_angle(phi_text), steps));
    } else if (sigma_cmd->parsed()) {
      const auto p = lpevac::parse_p(p_text);
      warn_large_p(p);
      std::optional<double> arc_len;
      if (!arc_text.empty()) arc_len = lpevac::parse_number(arc_text);
      output.write(lpevac::cmd_sigma(p, steps, arc_len));
    } else if (lchord_cmd->parsed()) {
      const auto p = lpevac::parse_p(p_text);
      warn_large_p(p);
      output.write(lpevac::cmd_lchord(p, steps));
    } else if (verify_cmd->parsed()) {
      lpevac::VerifyOptions options;
      for (const auto& text : split_list(p_list)) options.ps.push_back(lpevac::parse_p(text));
      options.grid = grid;
      options.tol = tol;
      options.gap_tol = gap_tol;
      options.chord_tol = chord_tol;
      const auto result = lpevac::cmd_verify(options);
      for (const auto& note : result.warnings) std::cerr << "warning: " << note << '\n';
      output.write(result.json);
      return result.all_passed ? kExitOk : kExitVerifyFailed;
    } else if (simulate_cmd->parsed()) {
      const auto p = lpevac::parse_p(p_text);
      warn_large_p(p);
      output.write(lpevac::cmd_simulate(p, lpevac::parse_angle(phi_text), lpevac::parse_angle(exit_text)));
    } else if (params_cmd->parsed()) {
      const auto p = lpevac::parse_p(p_text);
      warn_large_p(p);
      output.write(lpevac::cmd_params(p));
    }
  } catch (const lpevac::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
