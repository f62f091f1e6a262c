#pragma once

#include "setgap/distribution.hpp"
#include "setgap/types.hpp"

namespace setgap {

/// Shannon entropy in bits: sum over x of p_x log2(1/p_x), with the
/// convention 0 log2(1/0) := 0. Lies in [0, n].
double entropy(const SetDistribution& p);

/// Kullback-Leibler divergence D(q||p) in bits: sum of q_x log2(q_x/p_x).
/// Terms with q_x = 0 contribute nothing; any point with q_x > 0 and p_x = 0
/// makes the result +infinity.
ExtendedReal kl_divergence(const SetDistribution& q, const SetDistribution& p);

/// Cross-entropy in bits: sum of q_x log2(1/p_x), same zero and off-support
/// conventions. Equals entropy(q) + kl_divergence(q, p) whenever finite.
ExtendedReal cross_entropy(const SetDistribution& q, const SetDistribution& p);

}  // namespace setgap
