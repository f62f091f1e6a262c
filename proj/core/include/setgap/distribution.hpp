#pragma once

#include <span>
#include <vector>

#include "setgap/types.hpp"

namespace setgap {

inline constexpr double kMassSumTolerance = 1e-12;
inline constexpr double kNegativeMassTolerance = 1e-15;

/// Dense probability distribution over all 2^n subsets of [n], indexed by
/// SubsetMask. Entries are nonnegative and sum to 1 within kMassSumTolerance;
/// construction validates and never renormalizes. Immutable after
/// construction, so values can be shared freely across threads.
class SetDistribution {
 public:
  /// Validates: n in [0, kMaxGroundSize], exactly 2^n entries, no entry below
  /// -kNegativeMassTolerance (smaller negatives are clamped to zero), total
  /// mass 1 within kMassSumTolerance.
  SetDistribution(int n, std::vector<double> probs);

  int ground_size() const { return n_; }
  std::size_t size() const { return probs_.size(); }
  double prob(SubsetMask s) const { return probs_[s]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<double>& probs_vector() const { return probs_; }

 private:
  int n_;
  std::vector<double> probs_;
};

/// Named constructor matching the validation above.
SetDistribution make_distribution(int n, std::vector<double> probs);

/// Distribution concentrated on the single subset s.
SetDistribution point_mass(int n, SubsetMask s);

/// Pr[element in A] for A ~ p; element is 1-based.
double marginal(const SetDistribution& p, int element);

/// All n marginals in element order 1..n.
std::vector<double> marginals(const SetDistribution& p);

}  // namespace setgap
