#include "glmy/errors.hpp"

namespace glmy {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArrow: return "LoopArrow";
    case ErrorCode::DuplicateArrow: return "DuplicateArrow";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::BoundaryNotSquareZero: return "BoundaryNotSquareZero";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotASubdigraph: return "NotASubdigraph";
    case ErrorCode::InvalidMapping: return "InvalidMapping";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotMonotoneShape: return "NotMonotoneShape";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::OddLengthAxis: return "OddLengthAxis";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InvalidGridMap: return "InvalidGridMap";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace glmy
