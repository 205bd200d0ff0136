#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricsec {

enum class ErrorCode {
  MalformedFan,
  NonPrimitiveRay,
  DuplicateRay,
  DegenerateCone,
  NonFaceIntersection,
  IncompleteFan,
  NonSmoothFan,
  PointOutsideFan,
  FanMismatch,
  ConeNotMapped,
  MalformedMorphism,
  FiberNotSmoothComplete,
  FiberRayMismatch,
  DivisorFanMismatch,
  InputNotStronglyExceptional,
  NotAmple,
  SearchExhausted,
  EmptyCollection,
};

std::string_view to_string(ErrorCode code);

/// Structured diagnostic thrown by every validating operation in the library.
class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace toricsec
