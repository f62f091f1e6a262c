#include "setgap/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "setgap/error.hpp"

namespace setgap::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json real_to_json(double v) {
  if (std::isinf(v)) return "inf";
  return report_round(v);
}

ordered_json reals_to_json(std::span<const double> values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(real_to_json(v));
  return out;
}

ordered_json distribution_json(const SetDistribution& p, bool rounded) {
  ordered_json j;
  j["n"] = p.ground_size();
  if (rounded) {
    j["probs"] = reals_to_json(p.probs());
  } else {
    j["probs"] = p.probs_vector();
  }
  return j;
}

ordered_json family_json(const frankl::SetFamily& f) {
  ordered_json j;
  j["n"] = f.ground_size();
  j["members"] = f.members();
  return j;
}

ordered_json report_json(const gilmer::GapReport& report) {
  ordered_json j;
  j["distribution"] = distribution_json(report.distribution, /*rounded=*/true);
  j["union_distribution"] =
      distribution_json(report.union_distribution, /*rounded=*/true);
  j["marginals"] = reals_to_json(report.marginals);
  j["entropy_p"] = real_to_json(report.entropy_p);
  j["entropy_q"] = real_to_json(report.entropy_q);
  j["kl_q_p"] = real_to_json(report.kl_q_p);
  j["gap"] = real_to_json(report.gap);
  j["hypotheses_strict"] = report.hypotheses_strict;
  j["violates_conjecture"] = report.violates_conjecture;
  return j;
}

ordered_json check_json(const frankl::CheckReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["mode"] = report.mode;
  j["families_examined"] = report.families_examined;
  j["union_closed_count"] = report.union_closed_count;
  j["families_checked"] = report.families_checked;
  j["min_ratio"] = real_to_json(report.min_ratio);
  j["min_ratio_family"] = report.min_ratio_family
                              ? family_json(*report.min_ratio_family)
                              : ordered_json(nullptr);
  j["violations"] = ordered_json::array();
  for (const auto& f : report.violations) j["violations"].push_back(family_json(f));
  j["pass"] = report.pass();
  return j;
}

nlohmann::json parse_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::parse_error, "input is not valid JSON");
  return j;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(Errc::io_error, "cannot read " + path.string());
  return std::move(buffer).str();
}

}  // namespace

// 12 significant digits: enough to reproduce every asserted value, few
// enough that identical runs serialize identically.
double report_round(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

SetDistribution parse_distribution(const std::string& json_text) {
  const nlohmann::json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("n") || !j.contains("probs")) {
    fail(Errc::parse_error, R"(expected {"n": <int>, "probs": [...]})");
  }
  if (!j["n"].is_number_integer()) {
    fail(Errc::parse_error, "\"n\" must be an integer");
  }
  if (!j["probs"].is_array()) {
    fail(Errc::parse_error, "\"probs\" must be an array of numbers");
  }
  std::vector<double> probs;
  probs.reserve(j["probs"].size());
  for (const auto& entry : j["probs"]) {
    if (!entry.is_number()) {
      fail(Errc::parse_error, "\"probs\" must contain only numbers");
    }
    probs.push_back(entry.get<double>());
  }
  return make_distribution(j["n"].get<int>(), std::move(probs));
}

SetDistribution read_distribution_file(const std::filesystem::path& path) {
  return parse_distribution(slurp(path));
}

std::string distribution_to_json(const SetDistribution& p) {
  return distribution_json(p, /*rounded=*/false).dump();
}

void write_distribution_file(const std::filesystem::path& path,
                             const SetDistribution& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << distribution_to_json(p) << '\n';
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
}

frankl::SetFamily parse_family(const std::string& json_text) {
  const nlohmann::json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("n") || !j.contains("members")) {
    fail(Errc::parse_error, R"(expected {"n": <int>, "members": [...]})");
  }
  if (!j["n"].is_number_integer()) {
    fail(Errc::parse_error, "\"n\" must be an integer");
  }
  if (!j["members"].is_array()) {
    fail(Errc::parse_error, "\"members\" must be an array of masks");
  }
  std::vector<SubsetMask> members;
  members.reserve(j["members"].size());
  for (const auto& entry : j["members"]) {
    if (!entry.is_number_unsigned() && !entry.is_number_integer()) {
      fail(Errc::parse_error, "\"members\" must contain only integers");
    }
    const auto value = entry.get<std::int64_t>();
    if (value < 0) fail(Errc::parse_error, "member masks cannot be negative");
    members.push_back(static_cast<SubsetMask>(value));
  }
  return frankl::SetFamily(j["n"].get<int>(), std::move(members));
}

frankl::SetFamily read_family_file(const std::filesystem::path& path) {
  return parse_family(slurp(path));
}

std::string family_to_json(const frankl::SetFamily& f) {
  return family_json(f).dump();
}

std::string gap_report_to_json(const gilmer::GapReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string verify_paper_to_json(const gilmer::VerifyPaperResult& result, int indent) {
  ordered_json j;
  j["pass"] = result.pass;
  j["failures"] = result.failures;
  j["report"] = report_json(result.paper);
  j["perturbed_report"] = report_json(result.perturbed);
  return j.dump(indent);
}

std::string scan_to_json_lines(const gilmer::ScanResult& scan) {
  std::string out;
  for (const auto& sample : scan.samples) {
    ordered_json j;
    j["x"] = real_to_json(sample.x);
    j["gap"] = real_to_json(sample.gap);
    out += j.dump();
    out += '\n';
  }
  ordered_json brackets;
  brackets["sign_change_brackets"] = ordered_json::array();
  for (const auto& [lo, hi] : scan.sign_changes) {
    brackets["sign_change_brackets"].push_back(
        ordered_json::array({real_to_json(lo), real_to_json(hi)}));
  }
  out += brackets.dump();
  out += '\n';
  return out;
}

std::string search_result_to_json(const search::SearchResult& result, int indent) {
  ordered_json j;
  j["best"] = report_json(result.best);
  j["best_gap"] = real_to_json(result.best_gap);
  j["param_trace_length"] = result.param_trace_length;
  j["seed_used"] = result.seed_used;
  return j.dump(indent);
}

std::string check_report_to_json(const frankl::CheckReport& report, int indent) {
  return check_json(report).dump(indent);
}

}  // namespace setgap::io
