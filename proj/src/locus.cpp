#include "poncelet/locus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "poncelet/error.hpp"

namespace poncelet {
namespace {

constexpr double kPointLocusSpread = 1e-9;
constexpr int kMaxRefinements = 50;
constexpr double kStepTol = 1e-14;

struct Residuals {
  double rms = 0.0;
  double max = 0.0;
};

Residuals Measure(std::span<const Point> points, const Point& center, double radius) {
  Residuals r;
  double sum_sq = 0.0;
  for (const Point& p : points) {
    const double e = std::abs((p - center).norm() - radius);
    sum_sq += e * e;
    r.max = std::max(r.max, e);
  }
  r.rms = std::sqrt(sum_sq / static_cast<double>(points.size()));
  return r;
}

}  // namespace

std::vector<LocusSample> SampleLocus(const PonceletFamily& family, CenterKind kind, int m,
                                     bool use_contact_polygon) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "locus needs at least one sample");
  }
  const PonceletMap map(Circle(Point::Zero(), 1.0), family.inner_normalized);
  const AffineMap to_world = family.phi.Inverse();

  std::vector<LocusSample> samples;
  samples.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * std::numbers::pi * j / m;
    try {
      Polygon polygon(map.Trace(t, family.n).vertices);
      if (use_contact_polygon) polygon = TangencyPolygon(polygon, family.inner_normalized);
      const Polygon world = polygon.Transformed(to_world);
      samples.push_back({t, CenterOfMass(polygon, kind), CenterOfMass(world, kind)});
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (at t=" + std::to_string(t) + ")");
    }
  }
  return samples;
}

double Spread(std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

CircleFit FitCircle(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "circle fit needs at least 3 points");
  }
  Point mean = Point::Zero();
  for (const Point& p : points) mean += p;
  mean /= static_cast<double>(n);

  CircleFit fit;
  const double spread = Spread(points);
  if (spread < kPointLocusSpread) {
    fit.center = mean;
    return fit;
  }

  // Kasa fit on centered, rescaled data: x^2 + y^2 + D x + E y + F = 0.
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point q = (points[i] - mean) / spread;
    a.row(static_cast<Eigen::Index>(i)) << q.x(), q.y(), 1.0;
    rhs(static_cast<Eigen::Index>(i)) = -q.squaredNorm();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) {
    throw Error(ErrorCode::kCollinearPoints, "points admit no finite circle");
  }
  const Eigen::Vector3d coef = qr.solve(rhs);
  const Point c_scaled(-0.5 * coef(0), -0.5 * coef(1));
  const double r2 = c_scaled.squaredNorm() - coef(2);
  if (!(r2 > 0.0) || !std::isfinite(r2)) {
    throw Error(ErrorCode::kCollinearPoints, "algebraic fit has no real radius");
  }
  Point center = mean + spread * c_scaled;
  double radius = spread * std::sqrt(r2);

  // Gauss-Newton on orthogonal distances.
  Residuals best = Measure(points, center, radius);
  fit.refined = false;
  for (int iter = 0; iter < kMaxRefinements; ++iter) {
    Eigen::MatrixXd jac(n, 3);
    Eigen::VectorXd res(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point d = points[i] - center;
      const double dist = d.norm();
      const auto row = static_cast<Eigen::Index>(i);
      res(row) = dist - radius;
      if (dist > 0.0) {
        jac.row(row) << -d.x() / dist, -d.y() / dist, -1.0;
      } else {
        jac.row(row) << 0.0, 0.0, -1.0;
      }
    }
    const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-res);
    if (!step.allFinite()) break;
    const bool converged = step.norm() <= kStepTol * std::max(1.0, std::abs(radius));
    const Point next_center = center + step.head<2>();
    const double next_radius = radius + step(2);
    const Residuals trial = Measure(points, next_center, next_radius);
    if (!converged && trial.rms > best.rms) break;  // stalled
    center = next_center;
    radius = next_radius;
    best = trial;
    if (converged) {
      fit.refined = true;
      break;
    }
  }

  fit.center = center;
  fit.radius = std::abs(radius);
  const Residuals final_residuals = Measure(points, fit.center, fit.radius);
  fit.rms_residual = final_residuals.rms;
  fit.max_residual = final_residuals.max;
  return fit;
}

}  // namespace poncelet
