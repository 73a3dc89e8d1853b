#pragma once

#include <stdexcept>
#include <string>

namespace twistloop {

enum class ErrorCode {
  DivisionByZero,
  InvalidRoot,
  NonexistentLimit,
  WindowOverflow,
  BadTruncation,
  BadRoot,
  DegenerateForm,
  UnknownVariable,
  ResolutionFailed,
  EmptyInput,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// The library-wide exception type. Carries a machine-readable code so the
/// harness can map failures to report statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace twistloop
