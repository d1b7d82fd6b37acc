#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
  kInvalidArgument,
  kNonPositiveAxis,
  kNotOnConic,
  kPointAtInfinity,
  kSingularConic,
  kNotAnEllipse,
  kNotACircle,
  kVertexInsideInner,
  kInteriorPoint,
  kQuadratureFailure,
  kNoBracket,
  kDegenerate,
  kNotPeriodic,
  kZeroPerimeter,
  kZeroSignedArea,
  kEdgeNotTangent,
  kCollinearPoints,
};

std::string_view ErrorName(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace poncelet
