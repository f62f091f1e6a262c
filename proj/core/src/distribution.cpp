#include "setgap/distribution.hpp"

#include <cmath>
#include <utility>

#include "setgap/error.hpp"

namespace setgap {

SetDistribution::SetDistribution(int n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
  if (n_ < 0 || n_ > kMaxGroundSize) {
    fail(Errc::out_of_range,
         "ground-set size must be in [0, " + std::to_string(kMaxGroundSize) +
             "], got " + std::to_string(n_));
  }
  if (probs_.size() != subset_count(n_)) {
    fail(Errc::bad_length, "expected 2^" + std::to_string(n_) + " = " +
                               std::to_string(subset_count(n_)) +
                               " probabilities, got " +
                               std::to_string(probs_.size()));
  }
  double sum = 0.0;
  for (double& v : probs_) {
    if (v < -kNegativeMassTolerance) {
      fail(Errc::negative_mass, "entry " + std::to_string(v) + " is negative");
    }
    if (v < 0.0) v = 0.0;  // rounding dust within the tolerance
    sum += v;
  }
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    fail(Errc::bad_sum,
         "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

SetDistribution make_distribution(int n, std::vector<double> probs) {
  return SetDistribution(n, std::move(probs));
}

SetDistribution point_mass(int n, SubsetMask s) {
  if (n < 0 || n > kMaxGroundSize) {
    fail(Errc::out_of_range,
         "ground-set size must be in [0, " + std::to_string(kMaxGroundSize) +
             "], got " + std::to_string(n));
  }
  if (s >= subset_count(n)) {
    fail(Errc::out_of_range, "mask " + std::to_string(s) +
                                 " does not index a subset of [" +
                                 std::to_string(n) + "]");
  }
  std::vector<double> probs(subset_count(n), 0.0);
  probs[s] = 1.0;
  return SetDistribution(n, std::move(probs));
}

double marginal(const SetDistribution& p, int element) {
  if (element < 1 || element > p.ground_size()) {
    fail(Errc::index_out_of_range,
         "element " + std::to_string(element) + " is not in [1, " +
             std::to_string(p.ground_size()) + "]");
  }
  double total = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (mask_contains(static_cast<SubsetMask>(s), element)) {
      total += p.probs()[s];
    }
  }
  return total;
}

std::vector<double> marginals(const SetDistribution& p) {
  std::vector<double> out;
  out.reserve(p.ground_size());
  for (int e = 1; e <= p.ground_size(); ++e) out.push_back(marginal(p, e));
  return out;
}

}  // namespace setgap
