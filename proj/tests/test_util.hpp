#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "setgap/distribution.hpp"
#include "setgap/error.hpp"

namespace setgap::test {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Platform-independent uniform in [0, 1); the standard distributions are
// implementation-defined and would break frozen expectations.
inline double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Strictly positive entries summing to 1 (normalized exponentials, i.e.
// uniform on the simplex).
inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t len) {
  std::vector<double> v(len);
  double total = 0.0;
  for (double& x : v) {
    x = -std::log1p(-next_uniform(rng));
    total += x;
  }
  for (double& x : v) x /= total;
  return v;
}

inline SetDistribution random_distribution(std::mt19937_64& rng, int n) {
  return SetDistribution(n, random_simplex(rng, subset_count(n)));
}

}  // namespace setgap::test

#define CHECK_FAILS_WITH(expr, errc)                    \
  do {                                                  \
    try {                                               \
      (void)(expr);                                     \
      FAIL("expected an error from " #expr);            \
    } catch (const setgap::Error& e) {                  \
      CHECK(e.code() == (errc));                        \
    }                                                   \
  } while (0)
