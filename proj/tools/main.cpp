// setgap: verify, evaluate, scan and search the entropy gap of set
// distributions, plus desk-scale union-closed family checks. All output is
// JSON on stdout; exit codes are 0 pass, 1 failed check, 2 usage error,
// 3 search found no violation.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "setgap/error.hpp"
#include "setgap/frankl.hpp"
#include "setgap/gilmer.hpp"
#include "setgap/json_io.hpp"
#include "setgap/search.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoViolation = 3;

int usage_error(const std::string& message) {
  std::cerr << "setgap: " << message << '\n';
  return kExitUsage;
}

// Same formatting rule as the report serializers.
nlohmann::ordered_json cli_real(double v) {
  if (std::isinf(v)) return "inf";
  return setgap::io::report_round(v);
}

int run_verify_paper(const std::string& json_path) {
  const setgap::gilmer::VerifyPaperResult result = setgap::gilmer::verify_paper();
  const std::string json = setgap::io::verify_paper_to_json(result);
  std::cout << json << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "setgap: cannot write " << json_path << '\n';
      return kExitCheckFailed;
    }
    out << json << '\n';
  }
  return result.pass ? kExitPass : kExitCheckFailed;
}

int run_gap(const std::optional<double>& x, const std::optional<std::string>& dist_path,
            double epsilon) {
  if (dist_path) {
    std::optional<setgap::SetDistribution> dist;
    try {
      dist = setgap::io::read_distribution_file(*dist_path);
    } catch (const setgap::Error& e) {
      std::cerr << "setgap: " << e.what() << '\n';
      return kExitCheckFailed;
    }
    std::cout << setgap::io::gap_report_to_json(setgap::gilmer::analyze(*dist)) << '\n';
    return kExitPass;
  }

  nlohmann::ordered_json j;
  j["x"] = cli_real(*x);
  j["epsilon"] = cli_real(epsilon);
  if (epsilon > 0.0) {
    const auto report = setgap::gilmer::analyze(
        setgap::gilmer::perturbed_distribution({.x = *x, .epsilon = epsilon}));
    j["pipeline_gap"] = cli_real(report.gap);
    j["report"] = nlohmann::ordered_json::parse(setgap::io::gap_report_to_json(report));
  } else {
    const double closed = setgap::gilmer::gap_closed_form(*x);
    const auto report =
        setgap::gilmer::analyze(setgap::gilmer::paper_distribution({.x = *x}));
    j["closed_form_gap"] = cli_real(closed);
    j["pipeline_gap"] = cli_real(report.gap);
    j["difference"] = cli_real(closed - report.gap);
    j["report"] = nlohmann::ordered_json::parse(setgap::io::gap_report_to_json(report));
  }
  std::cout << j.dump(2) << '\n';
  return kExitPass;
}

int run_scan(double from, double to, int steps) {
  std::cout << setgap::io::scan_to_json_lines(setgap::gilmer::scan_gap(from, to, steps));
  return kExitPass;
}

int run_eval(const std::string& dist_path) {
  std::optional<setgap::SetDistribution> dist;
  try {
    dist = setgap::io::read_distribution_file(dist_path);
  } catch (const setgap::Error& e) {
    std::cerr << "setgap: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  std::cout << setgap::io::gap_report_to_json(setgap::gilmer::analyze(*dist)) << '\n';
  return kExitPass;
}

int run_search(const setgap::search::SearchConfig& cfg, const std::string& out_dist) {
  const setgap::search::SearchResult result = setgap::search::multistart_search(cfg);
  std::cout << setgap::io::search_result_to_json(result) << '\n';
  if (!out_dist.empty()) {
    setgap::io::write_distribution_file(out_dist, result.best.distribution);
  }
  return result.best.violates_conjecture ? kExitPass : kExitNoViolation;
}

int run_frankl(int n, const std::string& mode, std::uint64_t samples,
               std::uint64_t seed) {
  setgap::frankl::CheckReport report;
  if (mode == "exhaustive") {
    report = setgap::frankl::check_exhaustive(n);
  } else {
    report = setgap::frankl::check_sampled(n, samples, seed);
  }
  std::cout << setgap::io::check_report_to_json(report) << '\n';
  return report.pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy gap of set distributions and union-closed family checks"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify-paper", "Reproduce the x = 0.3 counterexample checks");
  std::string verify_json_path;
  verify->add_option("--json", verify_json_path, "Also write the report to this file");

  auto* gap_cmd = app.add_subcommand(
      "gap", "Gap of the two-element family at x, or of a distribution file");
  double gap_x = 0.0;
  std::string gap_dist;
  double gap_epsilon = 0.0;
  auto* opt_x = gap_cmd->add_option("--x", gap_x, "Family parameter in (0, 1/2)");
  auto* opt_dist = gap_cmd->add_option("--dist", gap_dist, "Distribution JSON file");
  auto* opt_eps = gap_cmd->add_option("--epsilon", gap_epsilon,
                                      "Perturbation toward strict marginals");
  opt_x->excludes(opt_dist);
  opt_dist->excludes(opt_x);
  opt_eps->needs(opt_x);

  auto* scan_cmd = app.add_subcommand("scan", "Closed-form gap over a grid of x");
  double scan_from = 0.0;
  double scan_to = 0.0;
  int scan_steps = 0;
  scan_cmd->add_option("--from", scan_from, "Left endpoint")->required();
  scan_cmd->add_option("--to", scan_to, "Right endpoint")->required();
  scan_cmd->add_option("--steps", scan_steps, "Grid points (inclusive)")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Full gap report for a distribution file");
  std::string eval_dist;
  eval_cmd->add_option("--dist", eval_dist, "Distribution JSON file")->required();

  auto* search_cmd = app.add_subcommand(
      "search", "Multistart descent for conjecture-violating distributions");
  setgap::search::SearchConfig cfg;
  std::string search_out_dist;
  search_cmd->add_option("--n", cfg.n, "Ground-set size (2..10)")->required();
  search_cmd->add_option("--seed", cfg.seed, "Base seed")->required();
  search_cmd->add_option("--restarts", cfg.restarts, "Independent restarts")->required();
  search_cmd->add_option("--cap", cfg.marginal_cap, "Marginal cap (default 1/2 - 1e-6)");
  search_cmd->add_option("--out-dist", search_out_dist,
                         "Write the winning distribution to this file");

  auto* frankl_cmd = app.add_subcommand(
      "frankl", "Union-closed family frequency checks");
  int frankl_n = 0;
  std::string frankl_mode = "exhaustive";
  std::uint64_t frankl_samples = setgap::frankl::kDefaultSampleCount;
  std::uint64_t frankl_seed = setgap::frankl::kDefaultSampleSeed;
  frankl_cmd->add_option("--n", frankl_n, "Ground-set size")->required();
  frankl_cmd->add_option("--mode", frankl_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  frankl_cmd->add_option("--samples", frankl_samples, "Sampled closures (sample mode)");
  frankl_cmd->add_option("--seed", frankl_seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify_paper(verify_json_path);
    if (*gap_cmd) {
      const bool has_x = opt_x->count() > 0;
      const bool has_dist = opt_dist->count() > 0;
      if (has_x == has_dist) {
        return usage_error("gap needs exactly one of --x or --dist");
      }
      return run_gap(has_x ? std::optional<double>(gap_x) : std::nullopt,
                     has_dist ? std::optional<std::string>(gap_dist) : std::nullopt,
                     gap_epsilon);
    }
    if (*scan_cmd) return run_scan(scan_from, scan_to, scan_steps);
    if (*eval_cmd) return run_eval(eval_dist);
    if (*search_cmd) return run_search(cfg, search_out_dist);
    if (*frankl_cmd) return run_frankl(frankl_n, frankl_mode, frankl_samples, frankl_seed);
  } catch (const setgap::Error& e) {
    // Anything reaching here is a bad parameter value, not bad input data.
    return usage_error(e.what());
  }
  return usage_error("no subcommand given");
}
