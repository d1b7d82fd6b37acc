#pragma once

#include "poncelet/conic.hpp"

namespace poncelet::detail {

// Families whose inner conic comes closer than this to the outer unit circle
// are rejected as degenerate.
inline constexpr double kMinClearance = 1e-6;

// 1 - max |p| over the ellipse described by `inner` (normalized frame, outer
// conic is the unit circle).
double NestingClearance(const EllipseParams& inner);

}  // namespace poncelet::detail
