#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "nesting.hpp"
#include "poncelet/dynamics.hpp"
#include "poncelet/error.hpp"

namespace poncelet {
namespace {

constexpr int kScanPoints = 32;
constexpr double kBisectionRhoTol = 1e-10;
constexpr double kPolishTol = 1e-12;

double Clearance(const Conic& outer, const Conic& inner) {
  return detail::NestingClearance(NormalizeOuter(outer, inner).inner.params());
}

// Largest free value in [0, hi) keeping the template strictly nested; the
// admissible set is an interval starting at (or near) zero.
double AdmissibleLimit(const Conic& outer, const InnerTemplate& tpl) {
  const double scale = outer.params().major;
  auto nested = [&](double v) {
    try {
      return Clearance(outer, tpl.Instantiate(v)) > 0.0;
    } catch (const Error&) {
      return false;
    }
  };
  // Tiny radii make the normalized form degenerate, so the scan starts above.
  double lo = tpl.free == FreeParameter::kRadius ? 1e-4 * scale : 0.0;
  if (!nested(lo)) {
    throw Error(ErrorCode::kNoBracket, "template is not nested at the start of its range");
  }
  double hi = 4.0 * scale;
  while (nested(hi)) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * scale; ++i) {
    const double mid = 0.5 * (lo + hi);
    (nested(mid) ? lo : hi) = mid;
  }
  return lo;
}

// lift after n steps minus 2 pi k; its sign is the sign of rho - k/n because
// the Poncelet map is conjugate to a rotation.
double AngularDefect(const Conic& outer, const Conic& inner, int n, int k) {
  const NormalizedPair pair = NormalizeOuter(outer, inner);
  const PonceletMap map(Circle(Point::Zero(), 1.0), pair.inner);
  return map.Trace(0.0, n).closing_lift - 2.0 * std::numbers::pi * k;
}

}  // namespace

Conic InnerTemplate::Instantiate(double value) const {
  if (free == FreeParameter::kRadius) {
    return ConicFromEllipse(base_center, value, value * axis_ratio, tilt);
  }
  return ConicFromEllipse(base_center + value * direction.normalized(), radius,
                          radius * axis_ratio, tilt);
}

PonceletFamily FindPeriodicFamily(const Conic& outer, const InnerTemplate& tpl, int n, int k) {
  CheckPeriod(n, k);
  if (!outer.is_ellipse()) {
    throw Error(ErrorCode::kNotAnEllipse, "outer conic must be an ellipse");
  }
  if (tpl.free == FreeParameter::kCenterOffset && !(tpl.direction.norm() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "offset direction must be nonzero");
  }
  const double limit = AdmissibleLimit(outer, tpl);
  const double lo = tpl.free == FreeParameter::kRadius ? 0.05 * limit : 0.0;
  const double hi = 0.95 * limit;

  auto defect = [&](double v) { return AngularDefect(outer, tpl.Instantiate(v), n, k); };

  std::vector<double> grid(kScanPoints), values(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = lo + (hi - lo) * i / (kScanPoints - 1);
    values[i] = defect(grid[i]);
  }
  int changes = 0, at = -1;
  for (int i = 0; i + 1 < kScanPoints; ++i) {
    if ((values[i] <= 0.0) != (values[i + 1] <= 0.0)) {
      ++changes;
      at = i;
    }
  }
  if (changes != 1) {
    const double rho_a = k / static_cast<double>(n) + values.front() / (2 * std::numbers::pi * n);
    const double rho_b = k / static_cast<double>(n) + values.back() / (2 * std::numbers::pi * n);
    throw Error(ErrorCode::kNoBracket,
                "rotation number " + std::to_string(k) + "/" + std::to_string(n) +
                    (changes == 0 ? " is not attained" : " is crossed more than once") +
                    " on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] (rho ranges " + std::to_string(rho_a) + " .. " + std::to_string(rho_b) +
                    ")");
  }

  double a = grid[at], b = grid[at + 1];
  double fa = values[at], fb = values[at + 1];
  const double rho_scale = 2.0 * std::numbers::pi * n;
  while (std::min(std::abs(fa), std::abs(fb)) / rho_scale >= kBisectionRhoTol &&
         b - a > 1e-15 * limit) {
    const double mid = 0.5 * (a + b);
    const double fm = defect(mid);
    if ((fm <= 0.0) == (fa <= 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }

  double root = std::abs(fa) <= std::abs(fb) ? a : b;
  if (std::min(std::abs(fa), std::abs(fb)) > kPolishTol && fa != 0.0 && fb != 0.0) {
    std::uintmax_t iterations = 100;
    auto tol = [](double x, double y) { return std::abs(x - y) <= 4e-16 * std::abs(x); };
    const auto [r0, r1] = boost::math::tools::toms748_solve(defect, a, b, fa, fb, tol, iterations);
    const double f0 = defect(r0), f1 = defect(r1);
    root = std::abs(f0) <= std::abs(f1) ? r0 : r1;
  }

  const Conic inner = tpl.Instantiate(root);
  const double clearance = Clearance(outer, inner);
  if (clearance < detail::kMinClearance) {
    throw Error(ErrorCode::kDegenerate,
                "solved inner conic touches the outer conic (clearance " +
                    std::to_string(clearance) + ")");
  }
  PonceletFamily family = CertifyFamily(outer, inner, n, k);
  family.free_parameter = tpl.free == FreeParameter::kRadius ? "radius" : "offset";
  family.free_value = root;
  return family;
}

}  // namespace poncelet
