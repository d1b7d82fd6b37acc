#include "poncelet/conic.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "poncelet/error.hpp"

namespace poncelet {
namespace {

constexpr double kDegenerateDet = 1e-12;
constexpr double kDiscriminantClamp = 1e-12;
constexpr double kOnConicTol = 1e-8;

Eigen::Matrix3d Adjugate(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

Eigen::Matrix3d UnitFrobenius(const Eigen::Matrix3d& m) {
  const double norm = m.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "conic matrix is zero or non-finite");
  }
  return m / norm;
}

Eigen::Vector3d Homogeneous(const Point& p) { return {p.x(), p.y(), 1.0}; }

void RequireEllipse(const Conic& c, const char* what) {
  if (!c.is_ellipse()) {
    throw Error(ErrorCode::kNotAnEllipse, std::string(what) + " requires an ellipse");
  }
}

}  // namespace

Line::Line(const Eigen::Vector3d& coeffs) {
  const double n = coeffs.head<2>().norm();
  if (!std::isfinite(coeffs.norm()) || !(n > 1e-14 * coeffs.norm())) {
    throw Error(ErrorCode::kInvalidArgument, "line triple is zero or at infinity");
  }
  l_ = coeffs / n;
}

Line Line::Through(const Point& p, const Point& q) {
  return Line(Homogeneous(p).cross(Homogeneous(q)));
}

bool Line::SameAs(const Line& other, double tol) const {
  return std::min((l_ - other.l_).norm(), (l_ + other.l_).norm()) < tol;
}

Conic Conic::FromMatrix(const Eigen::Matrix3d& raw) {
  Conic c;
  Eigen::Matrix3d m = UnitFrobenius(0.5 * (raw + raw.transpose()));

  const Eigen::Matrix2d a = m.topLeftCorner<2, 2>();
  const double det3 = m.determinant();
  if (std::abs(det3) <= kDegenerateDet) {
    c.kind_ = ConicKind::kDegenerate;
  } else if (a.determinant() > 0.0) {
    if (a.trace() < 0.0) m = -m;
    const Eigen::Matrix2d block = m.topLeftCorner<2, 2>();
    const Eigen::Vector2d b = m.topRightCorner<2, 1>();
    const Point center = -block.ldlt().solve(b);
    // Value of the form at the center.
    const double f0 = m(2, 2) + b.dot(center);
    if (f0 < 0.0) {
      c.kind_ = ConicKind::kEllipse;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(block);
      const Eigen::Vector2d lambda = eig.eigenvalues();
      EllipseParams params;
      params.center = center;
      params.major = std::sqrt(-f0 / lambda(0));
      params.minor = std::sqrt(-f0 / lambda(1));
      if (lambda(1) - lambda(0) <= 1e-14 * lambda(1)) {
        params.tilt = 0.0;
      } else {
        const Eigen::Vector2d axis = eig.eigenvectors().col(0);
        double tilt = std::atan2(axis.y(), axis.x());
        if (tilt <= -std::numbers::pi / 2) tilt += std::numbers::pi;
        if (tilt > std::numbers::pi / 2) tilt -= std::numbers::pi;
        params.tilt = tilt;
      }
      c.params_ = params;
    } else {
      c.kind_ = ConicKind::kNonEllipse;
    }
  } else {
    c.kind_ = ConicKind::kNonEllipse;
  }
  c.m_ = m;
  const Eigen::Matrix3d adj = Adjugate(m);
  c.dual_ = adj.norm() > 0.0 ? Eigen::Matrix3d(adj / adj.norm()) : adj;
  return c;
}

const EllipseParams& Conic::params() const {
  if (!params_) throw Error(ErrorCode::kNotAnEllipse, "conic has no ellipse parameters");
  return *params_;
}

bool Conic::IsCircle(double rel_tol) const {
  return params_ && params_->major - params_->minor <= rel_tol * params_->major;
}

Conic ConicFromEllipse(const Point& center, double a, double b, double tilt) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::kNonPositiveAxis,
                "semi-axes must be positive (got " + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  }
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(tilt).toRotationMatrix();
  const Eigen::Matrix2d shape =
      rot * Eigen::Vector2d(1.0 / (a * a), 1.0 / (b * b)).asDiagonal() * rot.transpose();
  Eigen::Matrix3d m;
  m.topLeftCorner<2, 2>() = shape;
  m.topRightCorner<2, 1>() = -shape * center;
  m.bottomLeftCorner<1, 2>() = (-shape * center).transpose();
  m(2, 2) = center.dot(shape * center) - 1.0;
  return Conic::FromMatrix(m);
}

Conic Circle(const Point& center, double radius) {
  return ConicFromEllipse(center, radius, radius, 0.0);
}

double Evaluate(const Conic& c, const Point& p) {
  const Eigen::Vector3d h = Homogeneous(p);
  return h.dot(c.matrix() * h);
}

Line PolarOfPoint(const Conic& c, const Point& p) {
  return Line(c.matrix() * Homogeneous(p));
}

std::vector<Line> TangentLinesFromPoint(const Conic& c, const Point& p) {
  RequireEllipse(c, "TangentLinesFromPoint");
  // Lines through p are (n, -n.p); restrict the dual form to that pencil.
  Eigen::Matrix<double, 3, 2> pencil;
  pencil << 1.0, 0.0, 0.0, 1.0, -p.x(), -p.y();
  Eigen::Matrix2d q = pencil.transpose() * c.dual() * pencil;
  q /= q.norm();
  const double disc = q(0, 1) * q(0, 1) - q(0, 0) * q(1, 1);
  if (disc < -kDiscriminantClamp) return {};
  if (disc <= kDiscriminantClamp) return {PolarOfPoint(c, p)};

  const double s = std::sqrt(disc);
  const double root = -q(0, 1) - std::copysign(s, q(0, 1));
  const Point n1(root, q(0, 0));
  const Point n2(q(1, 1), root);
  return {Line(Eigen::Vector3d(n1.x(), n1.y(), -n1.dot(p))),
          Line(Eigen::Vector3d(n2.x(), n2.y(), -n2.dot(p)))};
}

Point OtherIntersection(const Conic& c, const Point& p, const Line& l) {
  const double value = Evaluate(c, p);
  if (!(std::abs(value) < kOnConicTol)) {
    throw Error(ErrorCode::kNotOnConic,
                "point evaluates to " + std::to_string(value) + " on the conic");
  }
  const Eigen::Matrix3d& m = c.matrix();
  const Point d = l.direction();
  const Eigen::Vector2d half_grad = m.topLeftCorner<2, 2>() * p + m.topRightCorner<2, 1>();
  const double quad = d.dot(m.topLeftCorner<2, 2>() * d);
  if (quad == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "line is asymptotic to the conic");
  }
  // Roots of value + 2 s d.g + s^2 d'Ad sum to -2 d.g / d'Ad; one of them is 0.
  return p - (2.0 * d.dot(half_grad) / quad) * d;
}

Point PoleOfLine(const Conic& c, const Line& l) {
  if (c.kind() == ConicKind::kDegenerate) {
    throw Error(ErrorCode::kSingularConic, "pole requires a nondegenerate conic");
  }
  Eigen::Vector3d h = c.matrix().fullPivLu().solve(l.coeffs());
  h.normalize();
  if (std::abs(h(2)) < 1e-12) {
    throw Error(ErrorCode::kPointAtInfinity, "pole of line lies at infinity");
  }
  return h.head<2>() / h(2);
}

double TangencyDefect(const Conic& c, const Line& l) {
  return std::abs(l.coeffs().dot(c.dual() * l.coeffs()));
}

Conic DualConicWrt(const Conic& outer, const Conic& gamma) {
  if (outer.kind() == ConicKind::kDegenerate || gamma.kind() == ConicKind::kDegenerate) {
    throw Error(ErrorCode::kSingularConic, "polar dual requires nondegenerate conics");
  }
  const Eigen::Matrix3d& g = gamma.matrix();
  return Conic::FromMatrix(g * outer.matrix().inverse() * g);
}

double MatrixDistance(const Conic& a, const Conic& b) {
  return std::min((a.matrix() - b.matrix()).norm(), (a.matrix() + b.matrix()).norm());
}

}  // namespace poncelet
