#pragma once

#include <stdexcept>
#include <string>

namespace ocat {

enum class Errc {
  unknown_cell,
  dimension_out_of_range,
  dimension_mismatch,
  not_composable,
  closure_violation,
  target_mismatch,
  action_mismatch,
  budget_exceeded,
  schema_violation,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ocat
