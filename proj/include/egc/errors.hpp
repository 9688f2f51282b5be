#pragma once

#include <stdexcept>
#include <string>

namespace egc {

/// Classified failure reasons. The CLI maps domain errors to exit code 1 and
/// parse errors to exit code 2.
enum class Errc {
  invalid_table,
  invalid_pair,
  absent_edge,
  edge_exists,
  invalid_zeta,
  infeasible_value,
  curl_violation,
  invalid_weight,
  invalid_window,
  invalid_parameter,
  invalid_distribution,
  inconsistent_input,
  cyclic_order,
  too_large,
  parse_error,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }
  bool is_parse_error() const noexcept { return code_ == Errc::parse_error; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace egc
