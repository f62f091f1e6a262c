#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

namespace setgap {

/// A subset of [n] packed into bits: element i is present iff bit i-1 is set
/// (element 1 is the least significant bit). Masks below 2^n are valid for
/// ground-set size n, so the subsets of [2] enumerate as {}, {1}, {2}, {1,2}.
using SubsetMask = std::uint32_t;

/// A finite double or +infinity. Divergence and cross-entropy terms where the
/// first distribution charges a point of zero mass in the second evaluate to
/// +infinity; nothing in this library produces NaN or -infinity.
using ExtendedReal = double;

inline constexpr ExtendedReal kPlusInfinity = std::numeric_limits<double>::infinity();

/// Largest supported ground-set size. Distributions are dense vectors of
/// 2^n doubles, so n = 20 tops out at 8 MB per vector.
inline constexpr int kMaxGroundSize = 20;

constexpr std::size_t subset_count(int n) { return std::size_t{1} << n; }

constexpr bool mask_contains(SubsetMask s, int element) {
  return ((s >> (element - 1)) & 1u) != 0;
}

/// "{1,3}" rendering, "{}" for the empty set.
inline std::string mask_to_string(SubsetMask s, int n) {
  std::string out = "{";
  for (int e = 1; e <= n; ++e) {
    if (!mask_contains(s, e)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(e);
  }
  out += '}';
  return out;
}

}  // namespace setgap
