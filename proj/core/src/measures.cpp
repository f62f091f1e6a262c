#include "setgap/measures.hpp"

#include <cmath>

#include "setgap/error.hpp"

namespace setgap {

namespace {

void require_same_ground(const SetDistribution& q, const SetDistribution& p) {
  if (q.ground_size() != p.ground_size()) {
    fail(Errc::dimension_mismatch,
         "distributions over [" + std::to_string(q.ground_size()) + "] and [" +
             std::to_string(p.ground_size()) + "] cannot be compared");
  }
}

}  // namespace

double entropy(const SetDistribution& p) {
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  // An entry one rounding step above 1 can leave -1e-16-scale dust.
  return h < 0.0 ? 0.0 : h;
}

ExtendedReal kl_divergence(const SetDistribution& q, const SetDistribution& p) {
  require_same_ground(q, p);
  double d = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    const double qx = q.probs()[s];
    if (qx == 0.0) continue;
    const double px = p.probs()[s];
    if (px == 0.0) return kPlusInfinity;
    d += qx * std::log2(qx / px);
  }
  return d;
}

ExtendedReal cross_entropy(const SetDistribution& q, const SetDistribution& p) {
  require_same_ground(q, p);
  double h = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    const double qx = q.probs()[s];
    if (qx == 0.0) continue;
    const double px = p.probs()[s];
    if (px == 0.0) return kPlusInfinity;
    h -= qx * std::log2(px);
  }
  return h < 0.0 ? 0.0 : h;
}

}  // namespace setgap
