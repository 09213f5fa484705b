#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glmy {

enum class ErrorCode {
  LoopArrow,
  DuplicateArrow,
  UnknownVertex,
  LabelCollision,
  NotASublattice,
  BoundaryNotSquareZero,
  LiftFailure,
  DimensionMismatch,
  NotASubdigraph,
  InvalidMapping,
  NotACycle,
  BoundExceeded,
  IndexOutOfRange,
  ShapeMismatch,
  NotMonotoneShape,
  ModeMismatch,
  CoordinateOutOfRange,
  OddLengthAxis,
  WrongDimension,
  InvalidGridMap,
  NotAnIsomorphism,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glmy
