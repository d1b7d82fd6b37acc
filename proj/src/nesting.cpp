#include "nesting.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>

namespace poncelet::detail {

double NestingClearance(const EllipseParams& e) {
  const double c = std::cos(e.tilt), s = std::sin(e.tilt);
  auto neg_radius = [&](double theta) {
    const double u = e.major * std::cos(theta), v = e.minor * std::sin(theta);
    return -std::hypot(e.center.x() + c * u - s * v, e.center.y() + s * u + c * v);
  };
  constexpr int kSamples = 720;
  constexpr double kStep = 2.0 * std::numbers::pi / kSamples;
  int best = 0;
  double best_value = neg_radius(0.0);
  for (int i = 1; i < kSamples; ++i) {
    const double value = neg_radius(i * kStep);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  const auto [theta, value] =
      boost::math::tools::brent_find_minima(neg_radius, (best - 1) * kStep, (best + 1) * kStep, 52);
  return 1.0 + std::min(value, best_value);
}

}  // namespace poncelet::detail
