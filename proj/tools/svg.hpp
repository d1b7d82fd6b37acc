#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/mass_centers.hpp"
#include "poncelet/dynamics.hpp"

namespace poncelet::cli {

struct FrameOptions {
  bool contact = false;
  /// Centroid kind whose accumulated positions are drawn as the trace.
  std::optional<CenterKind> trace;
};

/// One SVG frame of the family at parameter t, drawn in the normalized frame
/// (outer conic = unit circle). `trace` holds the accumulated centroid
/// positions up to and including this frame.
std::string RenderFrame(const PonceletFamily& family, double t, const FrameOptions& options,
                        const std::vector<Point>& trace);

}  // namespace poncelet::cli
