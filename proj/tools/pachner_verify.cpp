// pachner-verify: seeded randomized verification of the 3->3 relations.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pachner/error.hpp"
#include "pachner/runner.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the 3->3 Pachner-move relations in affine volume-preserving R^3, "
               "plus a floating-point check of the Euclidean R^4 relation."};

  pachner::TrialConfig config;
  std::string checks = "all";
  std::string delta = "1/7";
  std::string report_path;
  bool quiet = false;

  app.add_option("--seed", config.seed, "Master seed (unsigned 64-bit)")->capture_default_str();
  app.add_option("--trials", config.trials, "Number of independent trials")->capture_default_str();
  app.add_option("--coord-range", config.coord_range, "Integer coordinates are drawn from [-R, R]")
      ->capture_default_str();
  app.add_option("--checks", checks,
                 "Comma-separated subset of boundary,transport,holonomy,flatness,rank,ratio,main,euclidean, or all")
      ->capture_default_str();
  app.add_option("--perturb-delta", delta, "Rational added to one lambda for the non-flat holonomy test")
      ->capture_default_str();
  app.add_option("--directions", config.directions, "Perturbation directions per Euclidean trial")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads (report is independent of this)")->capture_default_str();
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");
  app.add_flag("--timing", config.timing, "Include per-trial wall-clock times (breaks byte determinism)");
  app.add_flag("--quiet", quiet, "Suppress the console summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  pachner::RunResult result;
  try {
    config.checks = pachner::parse_check_list(checks);
    config.perturb_delta = pachner::Scalar::parse(delta);
    result = pachner::run(config);
  } catch (const pachner::Error& e) {
    std::cerr << "pachner-verify: " << e.what() << '\n';
    return e.code() == pachner::ErrorCode::InvalidConfig || e.code() == pachner::ErrorCode::DivisionByZero
               ? kExitUsage
               : kExitFailed;
  }

  if (report_path.empty()) {
    std::cout << result.report_json;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "pachner-verify: cannot write " << report_path << '\n';
      return kExitUsage;
    }
    out << result.report_json;
  }
  if (!quiet) {
    for (const auto& line : result.summary_lines) std::cerr << line << '\n';
  }
  return result.all_passed ? 0 : kExitFailed;
}
