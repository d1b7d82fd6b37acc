#pragma once

#include <Eigen/Core>

#include "poncelet/conic.hpp"

namespace poncelet {

/// p -> linear * p + translation, with invertible linear part.
class AffineMap {
 public:
  AffineMap() : linear_(Eigen::Matrix2d::Identity()), translation_(Point::Zero()) {}
  /// Throws kInvalidArgument when |det linear| <= 1e-12.
  AffineMap(const Eigen::Matrix2d& linear, const Point& translation);

  static AffineMap Identity() { return {}; }
  static AffineMap Similarity(double scale, double angle, const Point& translation);

  const Eigen::Matrix2d& linear() const { return linear_; }
  const Point& translation() const { return translation_; }

  Point operator()(const Point& p) const { return linear_ * p + translation_; }
  AffineMap Inverse() const;
  /// (*this) after inner.
  AffineMap Compose(const AffineMap& inner) const;
  /// 3x3 homogeneous matrix.
  Eigen::Matrix3d Homogeneous() const;

  bool IsSimilarity(double tol = 1e-12) const;

 private:
  Eigen::Matrix2d linear_;
  Point translation_;
};

/// Image of c under phi: the conic whose points are phi(p) for p on c.
Conic PushForward(const Conic& c, const AffineMap& phi);

/// Map taking the ellipse c onto the unit circle at the origin: translate to
/// the center, rotate by -tilt, then scale each axis to unit length.
AffineMap NormalizingMap(const Conic& c);

struct NormalizedPair {
  AffineMap phi;
  Conic inner;
};

/// Normalizes outer to the unit circle and carries inner along.
NormalizedPair NormalizeOuter(const Conic& outer, const Conic& inner);

}  // namespace poncelet
