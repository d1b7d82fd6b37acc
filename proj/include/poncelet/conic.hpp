#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace poncelet {

using Point = Eigen::Vector2d;

/// Center, semi-axes (major first) and tilt of the major axis, in radians
/// within (-pi/2, pi/2].
struct EllipseParams {
  Point center = Point::Zero();
  double major = 1.0;
  double minor = 1.0;
  double tilt = 0.0;
};

enum class ConicKind { kEllipse, kDegenerate, kNonEllipse };

/// Affine line l1*x + l2*y + l3 = 0 stored as a homogeneous triple scaled so
/// that (l1, l2) is a unit normal.
class Line {
 public:
  /// Throws kInvalidArgument for the zero triple or the line at infinity.
  explicit Line(const Eigen::Vector3d& coeffs);

  static Line Through(const Point& p, const Point& q);

  const Eigen::Vector3d& coeffs() const { return l_; }
  Point normal() const { return l_.head<2>(); }
  /// Unit direction, the normal rotated by +90 degrees.
  Point direction() const { return {-l_(1), l_(0)}; }
  /// Signed distance of p from the line.
  double Apply(const Point& p) const { return l_.head<2>().dot(p) + l_(2); }

  /// True when both triples describe the same line (up to sign).
  bool SameAs(const Line& other, double tol) const;

 private:
  Eigen::Vector3d l_;
};

/// Real projective conic given by a symmetric 3x3 form. The matrix is scaled
/// to unit Frobenius norm, and for ellipses its sign is chosen so that
/// interior points evaluate negative.
class Conic {
 public:
  /// Normalizes and classifies an arbitrary symmetric form.
  static Conic FromMatrix(const Eigen::Matrix3d& m);

  const Eigen::Matrix3d& matrix() const { return m_; }
  ConicKind kind() const { return kind_; }
  bool is_ellipse() const { return kind_ == ConicKind::kEllipse; }
  /// Throws kNotAnEllipse unless kind() == kEllipse.
  const EllipseParams& params() const;
  bool IsCircle(double rel_tol = 1e-9) const;

  /// Adjugate of matrix() scaled to unit Frobenius norm; tangent lines l
  /// satisfy l' * dual * l = 0.
  const Eigen::Matrix3d& dual() const { return dual_; }

 private:
  Conic() = default;

  Eigen::Matrix3d m_;
  Eigen::Matrix3d dual_;
  ConicKind kind_ = ConicKind::kDegenerate;
  std::optional<EllipseParams> params_;
};

/// Throws kNonPositiveAxis when either semi-axis is not positive. Axes given
/// in either order are accepted.
Conic ConicFromEllipse(const Point& center, double a, double b, double tilt);
Conic Circle(const Point& center, double radius);

double Evaluate(const Conic& c, const Point& p);

/// Tangents to an ellipse through p: none for interior points, one for points
/// on the conic, two for exterior points.
std::vector<Line> TangentLinesFromPoint(const Conic& c, const Point& p);

/// Second intersection of a line through p (a point on c) with c; equals p
/// when the line is tangent there.
Point OtherIntersection(const Conic& c, const Point& p, const Line& l);

/// Pole of a line with respect to c; the contact point when l is tangent.
Point PoleOfLine(const Conic& c, const Line& l);

/// Polar line of p with respect to c.
Line PolarOfPoint(const Conic& c, const Point& p);

/// |l' * dual * l| for the normalized dual form; zero iff l is tangent.
double TangencyDefect(const Conic& c, const Line& l);

/// gamma * outer^-1 * gamma: the conic whose tangents are the polars (with
/// respect to gamma) of the points of outer.
Conic DualConicWrt(const Conic& outer, const Conic& gamma);

/// Frobenius distance between normalized matrices, minimized over sign.
double MatrixDistance(const Conic& a, const Conic& b);

}  // namespace poncelet
