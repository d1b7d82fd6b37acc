#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/affine.hpp"
#include "poncelet/conic.hpp"
#include "poncelet/mass_centers.hpp"

namespace poncelet {

/// A vertex on the outer conic together with the tangent to the inner conic
/// along which it was reached. The initial flag of an orbit has no line.
struct Flag {
  Point vertex;
  std::optional<Line> incoming;
  /// Continuous lift of the vertex angle about the outer center, measured in
  /// the frame where the outer conic is the unit circle.
  double lifted_angle = 0.0;
};

/// The Poncelet map of a nested pair of ellipses. Flags handed to and
/// returned by this class live in the frame of the conics it was built from.
class PonceletMap {
 public:
  /// Throws kNotAnEllipse for non-ellipses and kDegenerate unless inner lies
  /// strictly inside outer.
  PonceletMap(const Conic& outer, const Conic& inner);

  const Conic& outer() const { return outer_; }
  const Conic& inner() const { return inner_; }
  /// Map taking outer to the unit circle.
  const AffineMap& normalization() const { return phi_; }

  /// Initial flag at the point of outer whose normalized angle is t.
  Flag Start(double t) const;

  /// Moves the vertex to the other end of the flag's line. The lift follows
  /// the traversal direction, so Sigma(Sigma(f)) restores f.
  Flag Sigma(const Flag& f) const;
  /// Keeps the vertex and switches to the other tangent through it. A flag
  /// without a line receives the tangent that keeps the inner conic on its
  /// left (counterclockwise travel).
  Flag Tau(const Flag& f) const;
  /// One Poncelet step: Tau, then Sigma along the new line.
  Flag Step(const Flag& f) const;

  /// Vertices of n-1 steps from Start(t), plus the lifted angle reached after
  /// the n-th step.
  struct Orbit {
    std::vector<Point> vertices;
    Point closing_vertex;
    double closing_lift = 0.0;
  };
  Orbit Trace(double t, int n) const;

  /// Smallest distance between the inner conic and the outer conic, in the
  /// normalized frame; positive iff nested.
  double Clearance() const;

 private:
  Conic outer_;
  Conic inner_;
  AffineMap phi_;
  AffineMap phi_inv_;
  Point inner_center_;
};

/// Single Poncelet step for the pair (outer, inner).
Flag PonceletStep(const Conic& outer, const Conic& inner, const Flag& f);

/// Birkhoff average of the lifted-angle advance, in turns per step.
/// Requires iterations >= 1000.
double RotationNumber(const Conic& outer, const Conic& inner, int iterations);

/// Length of the tangent segment from a to the circle c.
double TangentLength(const Conic& circle, const Point& a);

/// Integral of d(theta) / TangentLength over [theta1, theta2], where theta is
/// the angle about the center of the circle outer.
double MeasureOfArc(const Conic& outer, const Conic& inner, double theta1, double theta2);

/// A certified n-periodic pair.
struct PonceletFamily {
  Conic outer;
  Conic inner;
  int n = 0;
  int k = 0;
  double rho = 0.0;
  /// Chordal distance between the start vertex and its n-th image (t = 0,
  /// normalized frame).
  double closure_defect = 0.0;
  /// lift_n - t - 2 pi k at t = 0.
  double angular_defect = 0.0;
  AffineMap phi;
  /// Inner conic in the frame where outer is the unit circle.
  Conic inner_normalized;
  std::string free_parameter;
  double free_value = 0.0;

  PonceletMap Map() const { return PonceletMap(outer, inner); }
};

enum class Frame { kNormalized, kWorld };

/// Polygon of n vertices starting at normalized angle t.
Polygon OrbitPolygon(const PonceletFamily& family, double t, Frame frame = Frame::kNormalized);

/// Chordal closure defect of the orbit started at t, in the normalized frame.
double ClosureDefect(const PonceletFamily& family, double t);

/// Measures rho and closure defects of (outer, inner) and checks the family
/// invariants. Throws kNotPeriodic when the closure defect exceeds
/// closure_tol or rho misses k/n by more than 1e-10.
PonceletFamily CertifyFamily(const Conic& outer, const Conic& inner, int n, int k,
                             double closure_tol = 1e-8);

enum class FreeParameter { kRadius, kCenterOffset };

/// Inner ellipse with one free parameter. For kRadius the free value is the
/// semi-major axis (the minor axis follows axis_ratio); for kCenterOffset it
/// is the distance of the center from base_center along direction.
struct InnerTemplate {
  Point base_center = Point::Zero();
  double radius = 0.5;
  double axis_ratio = 1.0;
  double tilt = 0.0;
  Point direction = Point(1.0, 0.0);
  FreeParameter free = FreeParameter::kRadius;

  Conic Instantiate(double value) const;
};

/// Solves for the free parameter giving rotation number k/n: a scan of the
/// admissible interval locates a single sign change, bisection narrows it,
/// and a bracketing polish drives the angular closure defect below 1e-12.
/// Throws kNoBracket or kDegenerate.
PonceletFamily FindPeriodicFamily(const Conic& outer, const InnerTemplate& inner, int n, int k);

/// Validates 3 <= n, 1 <= k < n/2 and gcd(n, k) = 1.
void CheckPeriod(int n, int k);

}  // namespace poncelet
