#pragma once

#include <stdexcept>
#include <string>

namespace arrmi {

// Numeric values match the C API status codes and the CLI exit codes.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Unsupported = 3,
  VerificationFailed = 4,
  NotZeroDimensional = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arrmi
