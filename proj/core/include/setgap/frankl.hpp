#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setgap/types.hpp"

namespace setgap::frankl {

inline constexpr int kMaxFamilyGroundSize = 16;
inline constexpr int kMaxExhaustiveGroundSize = 3;
inline constexpr std::uint64_t kDefaultSampleCount = 100000;
inline constexpr std::uint64_t kDefaultSampleSeed = 1;

/// Finite collection of distinct subsets of [n], n in [1, 16].
class SetFamily {
 public:
  SetFamily(int n, std::vector<SubsetMask> members);

  int ground_size() const { return n_; }
  const std::vector<SubsetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  int n_;
  std::vector<SubsetMask> members_;
};

/// True iff the union of every pair of members is itself a member.
bool is_union_closed(const SetFamily& f);

/// Smallest union-closed superset of f; members come back sorted by mask.
/// Idempotent.
SetFamily union_closure(const SetFamily& f);

struct FrequencyResult {
  int element;   // 1-based, ties broken toward the smallest element
  double ratio;  // fraction of members containing it, in [0, 1]
};

FrequencyResult max_frequency(const SetFamily& f);

/// Outcome of a conjecture check over many union-closed families. The
/// union-closed conjecture predicts min_ratio >= 1/2 for every family other
/// than {{}}; any family below 1/2 lands in `violations` (finding one would
/// be publication-worthy, so callers treat a nonempty list as a hard error).
struct CheckReport {
  int n = 0;
  std::string mode;  // "exhaustive" or "sample"
  std::uint64_t families_examined = 0;
  std::uint64_t union_closed_count = 0;
  std::uint64_t families_checked = 0;  // union-closed, excluding {} and {{}}
  double min_ratio = 1.0;
  std::optional<SetFamily> min_ratio_family;
  std::vector<SetFamily> violations;

  bool pass() const { return violations.empty(); }
};

/// Enumerates all 2^(2^n) candidate families, filters the union-closed ones
/// and measures max_frequency on each. n in [1, 3].
CheckReport check_exhaustive(int n);

/// Closes `samples` random generator families and measures each closure.
/// Deterministic in (n, samples, seed).
CheckReport check_sampled(int n, std::uint64_t samples, std::uint64_t seed);

/// n <= 3 dispatches to the raw enumeration; n == 4 to closure sampling with
/// kDefaultSampleCount draws.
CheckReport check_conjecture(int n);

}  // namespace setgap::frankl
