#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "poncelet/dynamics.hpp"
#include "poncelet/error.hpp"

namespace poncelet {
namespace {

constexpr double kQuadratureTol = 1e-12;

const EllipseParams& RequireCircle(const Conic& c, const char* role) {
  if (!c.IsCircle()) {
    throw Error(ErrorCode::kNotACircle, std::string(role) + " conic must be a circle");
  }
  return c.params();
}

}  // namespace

double TangentLength(const Conic& circle, const Point& a) {
  const EllipseParams& e = RequireCircle(circle, "inner");
  const double r = e.major;
  const double d = (a - e.center).norm();
  if (std::abs(d - r) <= 1e-12 * r) return 0.0;
  if (d < r) {
    throw Error(ErrorCode::kInteriorPoint, "point lies inside the circle");
  }
  return std::sqrt((d - r) * (d + r));
}

double MeasureOfArc(const Conic& outer, const Conic& inner, double theta1, double theta2) {
  const EllipseParams& big = RequireCircle(outer, "outer");
  RequireCircle(inner, "inner");
  auto density = [&](double theta) {
    const Point a = big.center + big.major * Point(std::cos(theta), std::sin(theta));
    return 1.0 / TangentLength(inner, a);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      density, theta1, theta2, 15, 1e-14, &error);
  if (!(error <= kQuadratureTol) || !std::isfinite(value)) {
    throw Error(ErrorCode::kQuadratureFailure,
                "quadrature error estimate " + std::to_string(error) + " exceeds 1e-12");
  }
  return value;
}

}  // namespace poncelet
