#pragma once

#include <span>
#include <vector>

#include "poncelet/dynamics.hpp"
#include "poncelet/mass_centers.hpp"

namespace poncelet {

struct LocusSample {
  double t = 0.0;
  Point point;        // normalized frame
  Point point_world;  // centroid of the world-frame polygon
};

/// Centroids of P_t (or of its contact polygon Q_t) at t_j = 2 pi j / m.
/// Errors from the dynamics or the centroid formulas are rethrown with the
/// offending t appended.
std::vector<LocusSample> SampleLocus(const PonceletFamily& family, CenterKind kind, int m,
                                     bool use_contact_polygon = false);

struct CircleFit {
  Point center = Point::Zero();
  double radius = 0.0;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  /// False when the geometric refinement stalled and the algebraic estimate
  /// was kept.
  bool refined = true;
};

/// Algebraic least-squares circle followed by Gauss-Newton refinement of the
/// orthogonal distances. Clusters with spread below 1e-9 give a radius-zero
/// fit at their mean. Throws kCollinearPoints when no finite circle exists.
CircleFit FitCircle(std::span<const Point> points);

/// Largest pairwise distance.
double Spread(std::span<const Point> points);

}  // namespace poncelet
