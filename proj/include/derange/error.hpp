#pragma once

#include <stdexcept>
#include <string>

namespace derange {

// Machine-readable failure reasons. The CLI prints the code name on its own
// line before any prose, and tests assert on codes rather than messages.
enum class Errc {
  duplicate_element,
  missing_element,
  multiple_marks,
  empty_input,
  malformed_token,
  mark_out_of_range,
  is_derangement,
  largest_fixed_point_is_one,
  size_too_large,
  size_too_small,
  range_error,
  not_derangement,
  too_few_fixed_points,
  invariant_violation,
  unknown_spec,
  unknown_rng_algorithm,
  usage_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace derange
