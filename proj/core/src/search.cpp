#include "setgap/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <utility>

#include "setgap/error.hpp"
#include "setgap/measures.hpp"
#include "setgap/transform.hpp"

namespace setgap::search {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

// Uniform double in [0, 1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is implementation-defined, and search
// results must be reproducible everywhere.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const SearchConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 10) {
    fail(Errc::param_out_of_range,
         "search ground-set size must be in [2, 10], got " + std::to_string(cfg.n));
  }
  if (cfg.restarts < 1) {
    fail(Errc::param_out_of_range, "restarts must be positive");
  }
  if (cfg.max_iters < 1) {
    fail(Errc::param_out_of_range, "max_iters must be positive");
  }
  if (!(cfg.step_init > 0.0)) {
    fail(Errc::param_out_of_range, "step_init must be positive");
  }
  if (!(cfg.step_shrink > 0.0 && cfg.step_shrink < 1.0)) {
    fail(Errc::param_out_of_range, "step_shrink must lie in (0, 1)");
  }
  if (!(cfg.tol > 0.0)) {
    fail(Errc::param_out_of_range, "tol must be positive");
  }
  if (!(cfg.marginal_cap > 0.0 && cfg.marginal_cap <= 0.5)) {
    fail(Errc::param_out_of_range, "marginal_cap must lie in (0, 1/2]");
  }
}

double max_marginal(const std::vector<double>& v, int n) {
  double worst = 0.0;
  for (int e = 1; e <= n; ++e) {
    double m = 0.0;
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (mask_contains(static_cast<SubsetMask>(s), e)) m += v[s];
    }
    worst = std::max(worst, m);
  }
  return worst;
}

// Mixes mass toward the empty set until every marginal is within the cap;
// marginals are linear in the mixing weight, so one scaling suffices.
void repair_marginals(std::vector<double>& v, int n, double cap) {
  const double worst = max_marginal(v, n);
  if (worst <= cap) return;
  const double keep = cap / worst;
  for (double& x : v) x *= keep;
  v[0] += 1.0 - keep;
}

std::vector<double> make_feasible(std::vector<double> v, int n, double cap) {
  v = project_to_simplex(std::move(v));
  repair_marginals(v, n, cap);
  return v;
}

}  // namespace

std::vector<double> project_to_simplex(std::vector<double> v) {
  if (v.empty()) fail(Errc::empty_input, "cannot project an empty vector");

  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  double cumulative = 0.0;
  double cumulative_at_rho = 0.0;
  std::size_t rho = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    if (sorted[j] - (cumulative - 1.0) / static_cast<double>(j + 1) > 0.0) {
      rho = j + 1;
      cumulative_at_rho = cumulative;
    }
  }
  const double tau = (cumulative_at_rho - 1.0) / static_cast<double>(rho);
  for (double& x : v) x = std::max(x - tau, 0.0);
  return v;
}

SetDistribution random_feasible(int n, std::uint64_t seed, double marginal_cap) {
  if (n < 1 || n > 10) {
    fail(Errc::out_of_range,
         "random_feasible supports n in [1, 10], got " + std::to_string(n));
  }
  if (marginal_cap < 0.0) {
    fail(Errc::infeasible_cap, "no distribution has a negative marginal");
  }

  std::mt19937_64 rng(seed);
  std::vector<double> v(subset_count(n));
  double total = 0.0;
  for (double& x : v) {
    x = -std::log1p(-next_uniform(rng));  // Exp(1); normalized = simplex-uniform
    total += x;
  }
  for (double& x : v) x /= total;
  repair_marginals(v, n, marginal_cap);
  return SetDistribution(n, std::move(v));
}

SearchResult local_search(const SetDistribution& start, const SearchConfig& cfg) {
  validate(cfg);
  if (start.ground_size() != cfg.n) {
    fail(Errc::dimension_mismatch,
         "start distribution is over [" + std::to_string(start.ground_size()) +
             "], config says [" + std::to_string(cfg.n) + "]");
  }
  if (max_marginal(start.probs_vector(), cfg.n) >
      cfg.marginal_cap + kFeasibilitySlack) {
    fail(Errc::infeasible_start,
         "start distribution exceeds the marginal cap");
  }

  std::vector<double> current = start.probs_vector();
  double current_gap = gilmer::gilmer_gap(start);
  int trace_length = 1;

  const std::size_t count = current.size();
  double step = cfg.step_init;
  int iters = 0;

  while (step >= cfg.tol && iters < cfg.max_iters) {
    bool improved = false;
    for (std::size_t from = 0; from < count && iters < cfg.max_iters; ++from) {
      if (current[from] <= 0.0) continue;
      for (std::size_t to = 0; to < count && iters < cfg.max_iters; ++to) {
        if (to == from) continue;
        const double amount = std::min(step, current[from]);
        std::vector<double> candidate = current;
        candidate[from] -= amount;
        candidate[to] += amount;
        candidate = make_feasible(std::move(candidate), cfg.n, cfg.marginal_cap);
        ++iters;
        const double gap =
            gilmer::gilmer_gap(SetDistribution(cfg.n, candidate));
        if (gap < current_gap) {
          current = std::move(candidate);
          current_gap = gap;
          ++trace_length;
          improved = true;
        }
      }
    }
    if (!improved) step *= cfg.step_shrink;
  }

  SetDistribution best(cfg.n, std::move(current));
  return SearchResult{gilmer::analyze(best), current_gap, trace_length,
                      cfg.seed};
}

SearchResult multistart_search(const SearchConfig& cfg) {
  validate(cfg);
  std::optional<SearchResult> best;
  for (int r = 0; r < cfg.restarts; ++r) {
    SearchConfig restart_cfg = cfg;
    restart_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    const SetDistribution start =
        random_feasible(cfg.n, restart_cfg.seed, cfg.marginal_cap);
    SearchResult result = local_search(start, restart_cfg);
    // Strict comparison keeps the smallest restart index on ties, so the
    // merge is independent of evaluation order.
    if (!best || result.best_gap < best->best_gap) best = std::move(result);
  }
  return std::move(*best);
}

}  // namespace setgap::search
