#pragma once

#include <cstdint>
#include <vector>

#include "setgap/distribution.hpp"
#include "setgap/gilmer.hpp"

namespace setgap::search {

/// Derivative-free descent settings. Defaults are sized so an n = 2 search
/// finishes well under a second.
struct SearchConfig {
  int n = 2;                // ground-set size, 2..10
  std::uint64_t seed = 0;
  int restarts = 100;
  int max_iters = 5000;     // objective evaluations per restart
  double step_init = 0.05;
  double step_shrink = 0.5;
  double tol = 1e-7;        // stop once the step drops below this
  double marginal_cap = 0.5 - 1e-6;  // keeps found violations strictly feasible
};

struct SearchResult {
  gilmer::GapReport best;
  double best_gap;         // gilmer_gap of the reported distribution
  int param_trace_length;  // accepted points along the descent, start included
  std::uint64_t seed_used;
};

/// Euclidean projection onto the probability simplex (sort-and-shift);
/// idempotent, output nonnegative and summing to 1.
std::vector<double> project_to_simplex(std::vector<double> v);

/// Random distribution with every marginal <= marginal_cap, deterministic in
/// (n, seed, marginal_cap). Mass is shifted toward the empty set when the cap
/// binds, so any cap >= 0 is feasible (cap 0 forces the point mass on empty).
SetDistribution random_feasible(int n, std::uint64_t seed, double marginal_cap);

/// Greedy coordinate-pair descent on gilmer_gap: sweeps mass transfers of the
/// current step size, keeps strict improvements (after simplex projection and
/// marginal-cap repair), shrinks the step when a full sweep fails. Pure
/// function of (start, cfg).
SearchResult local_search(const SetDistribution& start, const SearchConfig& cfg);

/// cfg.restarts independent local searches from random_feasible starts with
/// per-restart seeds cfg.seed + r; returns the minimal best_gap, ties broken
/// toward the smaller restart index.
SearchResult multistart_search(const SearchConfig& cfg);

}  // namespace setgap::search
