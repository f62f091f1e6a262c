#pragma once

#include <filesystem>
#include <string>

#include "setgap/distribution.hpp"
#include "setgap/frankl.hpp"
#include "setgap/gilmer.hpp"
#include "setgap/search.hpp"

namespace setgap::io {

// Distribution files: {"n": <int>, "probs": [<2^n floats, mask order>]}.
// The parser applies exactly the make_distribution validation; the writer
// emits full-precision doubles so files round-trip bit-exactly.
SetDistribution parse_distribution(const std::string& json_text);
SetDistribution read_distribution_file(const std::filesystem::path& path);
std::string distribution_to_json(const SetDistribution& p);
void write_distribution_file(const std::filesystem::path& path, const SetDistribution& p);

// Family files: {"n": <int>, "members": [<masks>]}.
frankl::SetFamily parse_family(const std::string& json_text);
frankl::SetFamily read_family_file(const std::filesystem::path& path);
std::string family_to_json(const frankl::SetFamily& f);

/// The rounding applied to every float in report JSON: value of the shortest
/// decimal with at most 12 significant digits.
double report_round(double value);

// Report serializers. Floats are printed with 12 significant digits and
// +infinity encodes as the string "inf", so identical inputs serialize to
// identical bytes.
std::string gap_report_to_json(const gilmer::GapReport& report, int indent = 2);
std::string verify_paper_to_json(const gilmer::VerifyPaperResult& result, int indent = 2);
std::string scan_to_json_lines(const gilmer::ScanResult& scan);
std::string search_result_to_json(const search::SearchResult& result, int indent = 2);
std::string check_report_to_json(const frankl::CheckReport& report, int indent = 2);

}  // namespace setgap::io
