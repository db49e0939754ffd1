#include "realspin/error.hpp"

namespace realspin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidTopology: return "InvalidTopology";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotRealSpin: return "NotRealSpin";
    case ErrorCode::BadW1Parity: return "BadW1Parity";
    case ErrorCode::InvalidBundle: return "InvalidBundle";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::MissingBasepoint: return "MissingBasepoint";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace realspin
