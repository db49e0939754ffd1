#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realspin {

enum class ErrorCode {
  DimensionMismatch,
  InvalidTopology,
  CurveMismatch,
  UnknownGenerator,
  IndexOutOfRange,
  NotRealSpin,
  BadW1Parity,
  InvalidBundle,
  RankMismatch,
  BadParity,
  MissingBasepoint,
  BoundExceeded,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition failure in the library is reported through this type.
/// The code is stable and used by the CLI as the machine-readable error name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace realspin
