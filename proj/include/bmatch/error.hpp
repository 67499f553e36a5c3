#pragma once

#include <stdexcept>
#include <string>

namespace bmatch {

enum class ErrorCode {
  InvalidInput,
  DuplicatePoint,
  OddPointCount,
  TooFewPoints,
  CoincidentPoints,
  NoPerfectMatching,
  Internal,
};

/// Single exception type thrown by the library; the code drives the C API
/// status and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bmatch
