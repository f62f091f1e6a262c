#include "setgap/transform.hpp"

#include <utility>

#include "setgap/error.hpp"

namespace setgap {

namespace {

void require_power_of_two(std::size_t len) {
  if (len == 0 || (len & (len - 1)) != 0) {
    fail(Errc::bad_length, "transform length must be a power of two, got " +
                               std::to_string(len));
  }
}

void require_same_ground(const SetDistribution& p, const SetDistribution& r) {
  if (p.ground_size() != r.ground_size()) {
    fail(Errc::dimension_mismatch,
         "distributions over [" + std::to_string(p.ground_size()) + "] and [" +
             std::to_string(r.ground_size()) + "] cannot be convolved");
  }
}

}  // namespace

std::vector<double> zeta_transform(std::vector<double> v) {
  require_power_of_two(v.size());
  const std::size_t len = v.size();
  for (std::size_t bit = 1; bit < len; bit <<= 1) {
    for (std::size_t s = 0; s < len; ++s) {
      if (s & bit) v[s] += v[s ^ bit];
    }
  }
  return v;
}

std::vector<double> mobius_transform(std::vector<double> v) {
  require_power_of_two(v.size());
  const std::size_t len = v.size();
  for (std::size_t bit = 1; bit < len; bit <<= 1) {
    for (std::size_t s = 0; s < len; ++s) {
      if (s & bit) v[s] -= v[s ^ bit];
    }
  }
  return v;
}

SetDistribution union_convolve(const SetDistribution& p, const SetDistribution& r) {
  require_same_ground(p, r);
  std::vector<double> a = zeta_transform(p.probs_vector());
  const std::vector<double> b = zeta_transform(r.probs_vector());
  for (std::size_t s = 0; s < a.size(); ++s) a[s] *= b[s];
  std::vector<double> out = mobius_transform(std::move(a));
  // Moebius cancellation leaves 1e-16-scale dust on entries that are exactly
  // zero in exact arithmetic; anything more negative is a genuine bug and is
  // left for validation to reject.
  for (double& v : out) {
    if (v < 0.0 && v > -1e-12) v = 0.0;
  }
  return SetDistribution(p.ground_size(), std::move(out));
}

SetDistribution union_convolve_naive(const SetDistribution& p, const SetDistribution& r) {
  require_same_ground(p, r);
  const std::size_t len = p.size();
  std::vector<double> out(len, 0.0);
  for (std::size_t t = 0; t < len; ++t) {
    const double pt = p.probs()[t];
    if (pt == 0.0) continue;
    for (std::size_t u = 0; u < len; ++u) {
      out[t | u] += pt * r.probs()[u];
    }
  }
  return SetDistribution(p.ground_size(), std::move(out));
}

}  // namespace setgap
