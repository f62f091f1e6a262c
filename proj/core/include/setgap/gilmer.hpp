#pragma once

#include <string>
#include <utility>
#include <vector>

#include "setgap/distribution.hpp"
#include "setgap/types.hpp"

namespace setgap::gilmer {

/// Parameters of the two-element family p(empty) = p({1,2}) = x,
/// p({1}) = p({2}) = 1/2 - x, optionally perturbed by epsilon to push both
/// marginals strictly below 1/2.
struct PaperFamilyParam {
  double x = 0.3;
  double epsilon = 0.0;
};

/// Everything analyze() measures about one distribution. The conjecture
/// under test asserts gap > 0 whenever the hypotheses are strict.
struct GapReport {
  SetDistribution distribution;
  SetDistribution union_distribution;  // law of the union of two iid samples
  std::vector<double> marginals;
  double entropy_p;
  double entropy_q;
  ExtendedReal kl_q_p;
  ExtendedReal gap;        // cross_entropy(q, p) - entropy(p)
  bool hypotheses_strict;  // all marginals < 1/2 and entropy_p > 0
  bool violates_conjecture;  // hypotheses_strict and gap <= 0
};

/// The functional cross_entropy(q, p) - entropy(p) with q the law of the
/// union of two iid samples of p. +infinity iff support(p) is not
/// union-closed.
ExtendedReal gilmer_gap(const SetDistribution& p);

/// The inequality's left-hand side entropy(q) + kl_divergence(q, p).
ExtendedReal gilmer_lhs(const SetDistribution& p);

GapReport analyze(const SetDistribution& p);

/// Requires 0 < x < 1/2 and epsilon == 0. Marginals are exactly 1/2.
SetDistribution paper_distribution(const PaperFamilyParam& param);

/// Requires 0 < epsilon < min(x/2, 1/2 - x): all four entries positive and
/// both marginals exactly 1/2 - epsilon.
SetDistribution perturbed_distribution(const PaperFamilyParam& param);

/// Closed form of gilmer_gap(paper_distribution(x)):
/// (1/2 + 2x^2 - 2x) (log2(1/x) - log2(1/(1/2 - x))). Negative exactly on
/// (1/4, 1/2).
double gap_closed_form(double x);

struct GapSample {
  double x;
  double gap;
};

struct ScanResult {
  std::vector<GapSample> samples;
  /// (x_k, x_{k+1}) pairs whose gaps have strictly opposite signs.
  std::vector<std::pair<double, double>> sign_changes;
};

/// Evaluates gap_closed_form on an inclusive uniform grid of `steps` points.
ScanResult scan_gap(double x_from, double x_to, int steps);

struct VerifyPaperResult {
  GapReport paper;      // x = 0.3, unperturbed
  GapReport perturbed;  // x = 0.3, epsilon = 1e-4
  std::vector<std::string> failures;
  bool pass;
};

/// Reproduces the x = 0.3 construction end to end: union law (x^2,
/// 1/4 - x^2, 1/4 - x^2, 1/2 + x^2) within 1e-12, marginals 1/2 within 1e-15,
/// gap below -0.04, closed form vs pipeline within 1e-9, and the epsilon
/// perturbation strict and still below -0.04. Failed checks are reported,
/// never thrown.
VerifyPaperResult verify_paper();

}  // namespace setgap::gilmer
