#pragma once

#include <stdexcept>
#include <string>

namespace setgap {

enum class Errc {
  negative_mass,
  bad_sum,
  bad_length,
  dimension_mismatch,
  index_out_of_range,
  param_out_of_range,
  empty_input,
  infeasible_cap,
  infeasible_start,
  empty_family,
  duplicate_member,
  out_of_range,
  parse_error,
  io_error,
};

constexpr const char* to_string(Errc code) {
  switch (code) {
    case Errc::negative_mass: return "negative mass";
    case Errc::bad_sum: return "bad sum";
    case Errc::bad_length: return "bad length";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::param_out_of_range: return "parameter out of range";
    case Errc::empty_input: return "empty input";
    case Errc::infeasible_cap: return "infeasible cap";
    case Errc::infeasible_start: return "infeasible start";
    case Errc::empty_family: return "empty family";
    case Errc::duplicate_member: return "duplicate member";
    case Errc::out_of_range: return "out of range";
    case Errc::parse_error: return "parse error";
    case Errc::io_error: return "io error";
  }
  return "unknown error";
}

/// Every contract violation in this library throws Error; code() identifies
/// which contract failed, what() carries the details.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace setgap
