#pragma once

#include <vector>

#include "setgap/distribution.hpp"

namespace setgap {

/// Subset sums over the lattice: out[S] = sum over T subseteq S of v[T].
/// In-place butterfly, n * 2^n additions. Length must be a power of two.
std::vector<double> zeta_transform(std::vector<double> v);

/// Moebius inversion over the subset lattice; exact inverse of
/// zeta_transform.
std::vector<double> mobius_transform(std::vector<double> v);

/// Law of A (union) B for independent A ~ p, B ~ r: zeta transform both,
/// multiply pointwise, invert. O(n * 2^n).
SetDistribution union_convolve(const SetDistribution& p, const SetDistribution& r);

/// Reference O(4^n) accumulation of the same law, kept as the oracle the
/// fast path is tested against.
SetDistribution union_convolve_naive(const SetDistribution& p, const SetDistribution& r);

}  // namespace setgap
