#include "poncelet/affine.hpp"

#include <cmath>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "poncelet/error.hpp"

namespace poncelet {

AffineMap::AffineMap(const Eigen::Matrix2d& linear, const Point& translation)
    : linear_(linear), translation_(translation) {
  if (!(std::abs(linear.determinant()) > 1e-12)) {
    throw Error(ErrorCode::kInvalidArgument, "affine map is not invertible");
  }
}

AffineMap AffineMap::Similarity(double scale, double angle, const Point& translation) {
  return AffineMap(scale * Eigen::Rotation2Dd(angle).toRotationMatrix(), translation);
}

AffineMap AffineMap::Inverse() const {
  const Eigen::Matrix2d inv = linear_.inverse();
  return AffineMap(inv, -inv * translation_);
}

AffineMap AffineMap::Compose(const AffineMap& inner) const {
  return AffineMap(linear_ * inner.linear_, linear_ * inner.translation_ + translation_);
}

Eigen::Matrix3d AffineMap::Homogeneous() const {
  Eigen::Matrix3d h = Eigen::Matrix3d::Identity();
  h.topLeftCorner<2, 2>() = linear_;
  h.topRightCorner<2, 1>() = translation_;
  return h;
}

bool AffineMap::IsSimilarity(double tol) const {
  const Eigen::Matrix2d gram = linear_.transpose() * linear_;
  const double s2 = 0.5 * gram.trace();
  return (gram - s2 * Eigen::Matrix2d::Identity()).norm() <= tol * s2;
}

Conic PushForward(const Conic& c, const AffineMap& phi) {
  const Eigen::Matrix3d inv = phi.Inverse().Homogeneous();
  return Conic::FromMatrix(inv.transpose() * c.matrix() * inv);
}

AffineMap NormalizingMap(const Conic& c) {
  if (!c.is_ellipse()) {
    throw Error(ErrorCode::kSingularConic, "only ellipses can be normalized");
  }
  const EllipseParams& e = c.params();
  const Eigen::Matrix2d linear = Eigen::Vector2d(1.0 / e.major, 1.0 / e.minor).asDiagonal() *
                                 Eigen::Rotation2Dd(-e.tilt).toRotationMatrix();
  return AffineMap(linear, -linear * e.center);
}

NormalizedPair NormalizeOuter(const Conic& outer, const Conic& inner) {
  AffineMap phi = NormalizingMap(outer);
  Conic moved = PushForward(inner, phi);
  return {phi, moved};
}

}  // namespace poncelet
