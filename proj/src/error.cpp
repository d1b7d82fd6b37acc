#include "poncelet/error.hpp"

namespace poncelet {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonPositiveAxis: return "NonPositiveAxis";
    case ErrorCode::kNotOnConic: return "NotOnConic";
    case ErrorCode::kPointAtInfinity: return "PointAtInfinity";
    case ErrorCode::kSingularConic: return "SingularConic";
    case ErrorCode::kNotAnEllipse: return "NotAnEllipse";
    case ErrorCode::kNotACircle: return "NotACircle";
    case ErrorCode::kVertexInsideInner: return "VertexInsideInner";
    case ErrorCode::kInteriorPoint: return "InteriorPoint";
    case ErrorCode::kQuadratureFailure: return "QuadratureFailure";
    case ErrorCode::kNoBracket: return "NoBracket";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kNotPeriodic: return "NotPeriodic";
    case ErrorCode::kZeroPerimeter: return "ZeroPerimeter";
    case ErrorCode::kZeroSignedArea: return "ZeroSignedArea";
    case ErrorCode::kEdgeNotTangent: return "EdgeNotTangent";
    case ErrorCode::kCollinearPoints: return "CollinearPoints";
  }
  return "Unknown";
}

}  // namespace poncelet
