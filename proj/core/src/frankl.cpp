#include "setgap/frankl.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "setgap/error.hpp"

namespace setgap::frankl {

namespace {

std::uint64_t count_containing(const std::vector<SubsetMask>& members, int element) {
  std::uint64_t count = 0;
  for (SubsetMask m : members) {
    if (mask_contains(m, element)) ++count;
  }
  return count;
}

FrequencyResult max_frequency_of(const std::vector<SubsetMask>& members, int n) {
  int best_element = 1;
  std::uint64_t best_count = count_containing(members, 1);
  for (int e = 2; e <= n; ++e) {
    const std::uint64_t c = count_containing(members, e);
    if (c > best_count) {  // strict: ties stay with the smaller element
      best_count = c;
      best_element = e;
    }
  }
  return {best_element,
          static_cast<double>(best_count) / static_cast<double>(members.size())};
}

void record(CheckReport& report, const std::vector<SubsetMask>& members, int n) {
  ++report.families_checked;
  const FrequencyResult freq = max_frequency_of(members, n);
  if (freq.ratio < report.min_ratio || !report.min_ratio_family) {
    report.min_ratio = freq.ratio;
    report.min_ratio_family = SetFamily(n, members);
  }
  if (freq.ratio < 0.5) report.violations.push_back(SetFamily(n, members));
}

}  // namespace

SetFamily::SetFamily(int n, std::vector<SubsetMask> members)
    : n_(n), members_(std::move(members)) {
  if (n_ < 1 || n_ > kMaxFamilyGroundSize) {
    fail(Errc::out_of_range,
         "family ground-set size must be in [1, " +
             std::to_string(kMaxFamilyGroundSize) + "], got " + std::to_string(n_));
  }
  const std::size_t space = subset_count(n_);
  std::vector<bool> seen(space, false);
  for (SubsetMask m : members_) {
    if (m >= space) {
      fail(Errc::out_of_range, "member mask " + std::to_string(m) +
                                   " is not a subset of [" + std::to_string(n_) + "]");
    }
    if (seen[m]) {
      fail(Errc::duplicate_member,
           "member " + mask_to_string(m, n_) + " appears twice");
    }
    seen[m] = true;
  }
}

bool is_union_closed(const SetFamily& f) {
  std::vector<bool> member(subset_count(f.ground_size()), false);
  for (SubsetMask m : f.members()) member[m] = true;
  const auto& ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (!member[ms[a] | ms[b]]) return false;
    }
  }
  return true;
}

SetFamily union_closure(const SetFamily& f) {
  std::vector<bool> member(subset_count(f.ground_size()), false);
  std::vector<SubsetMask> closure;
  closure.reserve(f.size());
  for (SubsetMask m : f.members()) {
    if (!member[m]) {
      member[m] = true;
      closure.push_back(m);
    }
  }
  // Incremental fixpoint: every new member gets unioned against everything
  // discovered before it.
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const SubsetMask u = closure[i] | closure[j];
      if (!member[u]) {
        member[u] = true;
        closure.push_back(u);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return SetFamily(f.ground_size(), std::move(closure));
}

FrequencyResult max_frequency(const SetFamily& f) {
  if (f.size() == 0) {
    fail(Errc::empty_family, "frequency over an empty family is undefined");
  }
  return max_frequency_of(f.members(), f.ground_size());
}

CheckReport check_exhaustive(int n) {
  if (n < 1 || n > kMaxExhaustiveGroundSize) {
    fail(Errc::out_of_range,
         "exhaustive enumeration supports n in [1, " +
             std::to_string(kMaxExhaustiveGroundSize) + "], got " + std::to_string(n));
  }

  CheckReport report;
  report.n = n;
  report.mode = "exhaustive";
  report.min_ratio = std::numeric_limits<double>::infinity();

  const std::size_t space = subset_count(n);  // distinct subsets of [n]
  const std::uint64_t family_count = std::uint64_t{1} << space;
  std::vector<SubsetMask> members;
  members.reserve(space);

  for (std::uint64_t fam = 0; fam < family_count; ++fam) {
    ++report.families_examined;
    members.clear();
    for (std::size_t m = 0; m < space; ++m) {
      if ((fam >> m) & 1u) members.push_back(static_cast<SubsetMask>(m));
    }
    bool closed = true;
    for (std::size_t a = 0; a < members.size() && closed; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!((fam >> (members[a] | members[b])) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ++report.union_closed_count;
    if (fam == 0 || fam == 1) continue;  // the empty family and {{}}
    record(report, members, n);
  }
  if (report.families_checked == 0) report.min_ratio = 1.0;
  return report;
}

CheckReport check_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > kMaxFamilyGroundSize) {
    fail(Errc::out_of_range,
         "sampled check supports n in [1, " +
             std::to_string(kMaxFamilyGroundSize) + "], got " + std::to_string(n));
  }
  if (samples < 1) {
    fail(Errc::param_out_of_range, "need at least one sample");
  }

  CheckReport report;
  report.n = n;
  report.mode = "sample";
  report.min_ratio = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  const std::size_t space = subset_count(n);
  const std::uint64_t max_generators = std::min<std::uint64_t>(space, 16);
  std::vector<bool> used(space, false);

  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t generator_count = 1 + rng() % max_generators;
    std::fill(used.begin(), used.end(), false);
    std::vector<SubsetMask> generators;
    generators.reserve(generator_count);
    while (generators.size() < generator_count) {
      const auto m = static_cast<SubsetMask>(rng() % space);
      if (!used[m]) {
        used[m] = true;
        generators.push_back(m);
      }
    }
    const SetFamily closed = union_closure(SetFamily(n, std::move(generators)));
    ++report.families_examined;
    ++report.union_closed_count;
    if (closed.size() == 1 && closed.members()[0] == 0) continue;  // {{}}
    record(report, closed.members(), n);
  }
  if (report.families_checked == 0) report.min_ratio = 1.0;
  return report;
}

CheckReport check_conjecture(int n) {
  if (n >= 1 && n <= kMaxExhaustiveGroundSize) return check_exhaustive(n);
  if (n == 4) return check_sampled(4, kDefaultSampleCount, kDefaultSampleSeed);
  fail(Errc::out_of_range,
       "conjecture check supports n in [1, 4], got " + std::to_string(n));
}

}  // namespace setgap::frankl
