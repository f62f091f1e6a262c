#include "setgap/gilmer.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "setgap/error.hpp"
#include "setgap/measures.hpp"
#include "setgap/transform.hpp"

namespace setgap::gilmer {

namespace {

void require_x_in_domain(double x) {
  if (!(x > 0.0 && x < 0.5)) {
    fail(Errc::param_out_of_range,
         "x must lie in (0, 1/2), got " + std::to_string(x));
  }
}

}  // namespace

ExtendedReal gilmer_gap(const SetDistribution& p) {
  const SetDistribution q = union_convolve(p, p);
  return cross_entropy(q, p) - entropy(p);
}

ExtendedReal gilmer_lhs(const SetDistribution& p) {
  const SetDistribution q = union_convolve(p, p);
  return entropy(q) + kl_divergence(q, p);
}

GapReport analyze(const SetDistribution& p) {
  SetDistribution q = union_convolve(p, p);
  std::vector<double> margs = marginals(p);
  const double entropy_p = entropy(p);
  const double entropy_q = entropy(q);
  const ExtendedReal kl_q_p = kl_divergence(q, p);
  const ExtendedReal gap = cross_entropy(q, p) - entropy_p;

  bool strict = entropy_p > 0.0;
  for (double m : margs) strict = strict && m < 0.5;
  const bool violates = strict && gap <= 0.0;

  return GapReport{p,         std::move(q), std::move(margs), entropy_p,
                   entropy_q, kl_q_p,       gap,              strict,
                   violates};
}

SetDistribution paper_distribution(const PaperFamilyParam& param) {
  require_x_in_domain(param.x);
  if (param.epsilon != 0.0) {
    fail(Errc::param_out_of_range,
         "the unperturbed family requires epsilon = 0; use "
         "perturbed_distribution for epsilon > 0");
  }
  const double x = param.x;
  return SetDistribution(2, {x, 0.5 - x, 0.5 - x, x});
}

SetDistribution perturbed_distribution(const PaperFamilyParam& param) {
  require_x_in_domain(param.x);
  const double limit = std::min(param.x / 2.0, 0.5 - param.x);
  if (!(param.epsilon > 0.0 && param.epsilon < limit)) {
    fail(Errc::param_out_of_range,
         "epsilon must lie in (0, min(x/2, 1/2 - x)) = (0, " +
             std::to_string(limit) + "), got " + std::to_string(param.epsilon));
  }
  const double x = param.x;
  const double e = param.epsilon;
  return SetDistribution(2, {x, 0.5 + e - x, 0.5 + e - x, x - 2.0 * e});
}

double gap_closed_form(double x) {
  require_x_in_domain(x);
  const double coeff = 0.5 + 2.0 * x * x - 2.0 * x;
  return coeff * std::log2(1.0 / x) - coeff * std::log2(1.0 / (0.5 - x));
}

ScanResult scan_gap(double x_from, double x_to, int steps) {
  if (!(x_from > 0.0 && x_from < x_to && x_to < 0.5)) {
    fail(Errc::param_out_of_range, "scan range must satisfy 0 < from < to < 1/2");
  }
  if (steps < 2) {
    fail(Errc::param_out_of_range,
         "need at least 2 grid points, got " + std::to_string(steps));
  }
  ScanResult result;
  result.samples.reserve(steps);
  const double h = (x_to - x_from) / (steps - 1);
  for (int k = 0; k < steps; ++k) {
    const double x = (k == steps - 1) ? x_to : x_from + k * h;
    result.samples.push_back({x, gap_closed_form(x)});
  }
  for (int k = 0; k + 1 < steps; ++k) {
    const double a = result.samples[k].gap;
    const double b = result.samples[k + 1].gap;
    if ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0)) {
      result.sign_changes.emplace_back(result.samples[k].x,
                                       result.samples[k + 1].x);
    }
  }
  return result;
}

VerifyPaperResult verify_paper() {
  const double x = 0.3;
  const double eps = 1e-4;

  GapReport paper = analyze(paper_distribution({.x = x}));
  GapReport perturbed = analyze(perturbed_distribution({.x = x, .epsilon = eps}));

  std::vector<std::string> failures;
  const auto check = [&failures](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  const double expected_q[4] = {x * x, 0.25 - x * x, 0.25 - x * x,
                                0.5 + x * x};
  for (SubsetMask s = 0; s < 4; ++s) {
    check(std::abs(paper.union_distribution.prob(s) - expected_q[s]) <= 1e-12,
          "union law entry " + std::to_string(s) +
              " differs from the hand derivation");
  }
  for (double m : paper.marginals) {
    check(std::abs(m - 0.5) <= 1e-15, "marginal is not exactly 1/2");
  }
  check(paper.gap < -0.04, "gap at x = 0.3 is not below -0.04");
  check(std::abs(paper.gap - gap_closed_form(x)) <= 1e-9,
        "closed form and generic pipeline disagree");
  check(perturbed.hypotheses_strict,
        "perturbed distribution does not satisfy the strict hypotheses");
  check(perturbed.gap < -0.04, "perturbed gap is not below -0.04");

  const bool pass = failures.empty();
  return VerifyPaperResult{std::move(paper), std::move(perturbed),
                           std::move(failures), pass};
}

}  // namespace setgap::gilmer
