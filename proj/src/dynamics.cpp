#include "poncelet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "poncelet/error.hpp"
#include "nesting.hpp"

namespace poncelet {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double Cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

PonceletMap::PonceletMap(const Conic& outer, const Conic& inner)
    : outer_(outer), inner_(inner), phi_(), phi_inv_() {
  if (!outer.is_ellipse() || !inner.is_ellipse()) {
    throw Error(ErrorCode::kNotAnEllipse, "Poncelet map needs two ellipses");
  }
  phi_ = NormalizingMap(outer);
  phi_inv_ = phi_.Inverse();
  inner_center_ = inner.params().center;
  if (!(Clearance() > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "inner conic is not strictly inside the outer conic");
  }
}

double PonceletMap::Clearance() const {
  return detail::NestingClearance(PushForward(inner_, phi_).params());
}

Flag PonceletMap::Start(double t) const {
  return Flag{phi_inv_(Point(std::cos(t), std::sin(t))), std::nullopt, t};
}

Flag PonceletMap::Sigma(const Flag& f) const {
  if (!f.incoming) {
    throw Error(ErrorCode::kInvalidArgument, "sigma needs a flag with a line");
  }
  const Point raw = OtherIntersection(outer_, f.vertex, *f.incoming);
  // Snap back onto the outer conic so rounding does not accumulate.
  const Point from = phi_(f.vertex);
  Point to = phi_(raw);
  to.normalize();
  const Point next = phi_inv_(to);

  double delta = std::atan2(Cross(from, to), from.dot(to));
  const bool forward = Cross(next - f.vertex, inner_center_ - f.vertex) > 0.0;
  if (forward && delta <= 0.0) delta += kTwoPi;
  if (!forward && delta >= 0.0) delta -= kTwoPi;
  return Flag{next, f.incoming, f.lifted_angle + delta};
}

Flag PonceletMap::Tau(const Flag& f) const {
  if (Evaluate(inner_, f.vertex) <= 0.0) {
    throw Error(ErrorCode::kVertexInsideInner, "vertex lies inside the inner conic");
  }
  std::vector<Line> lines = TangentLinesFromPoint(inner_, f.vertex);
  if (lines.size() != 2) {
    throw Error(ErrorCode::kVertexInsideInner, "vertex is not strictly outside the inner conic");
  }
  std::size_t pick = 0;
  if (f.incoming) {
    auto distance = [&](const Line& l) {
      return std::min((l.coeffs() - f.incoming->coeffs()).norm(),
                      (l.coeffs() + f.incoming->coeffs()).norm());
    };
    pick = distance(lines[0]) >= distance(lines[1]) ? 0 : 1;
  } else {
    const Point q = OtherIntersection(outer_, f.vertex, lines[0]);
    pick = Cross(q - f.vertex, inner_center_ - f.vertex) > 0.0 ? 0 : 1;
  }
  return Flag{f.vertex, lines[pick], f.lifted_angle};
}

Flag PonceletMap::Step(const Flag& f) const { return Sigma(Tau(f)); }

PonceletMap::Orbit PonceletMap::Trace(double t, int n) const {
  Orbit orbit;
  orbit.vertices.reserve(static_cast<std::size_t>(n));
  Flag f = Start(t);
  orbit.vertices.push_back(f.vertex);
  for (int i = 1; i < n; ++i) {
    f = Step(f);
    orbit.vertices.push_back(f.vertex);
  }
  f = Step(f);
  orbit.closing_vertex = f.vertex;
  orbit.closing_lift = f.lifted_angle;
  return orbit;
}

Flag PonceletStep(const Conic& outer, const Conic& inner, const Flag& f) {
  return PonceletMap(outer, inner).Step(f);
}

double RotationNumber(const Conic& outer, const Conic& inner, int iterations) {
  if (iterations < 1000) {
    throw Error(ErrorCode::kInvalidArgument, "rotation number needs at least 1000 iterations");
  }
  const PonceletMap map(outer, inner);
  Flag f = map.Start(0.0);
  for (int i = 0; i < iterations; ++i) f = map.Step(f);
  return f.lifted_angle / (kTwoPi * iterations);
}

Polygon OrbitPolygon(const PonceletFamily& family, double t, Frame frame) {
  const PonceletMap map(Circle(Point::Zero(), 1.0), family.inner_normalized);
  std::vector<Point> vertices = map.Trace(t, family.n).vertices;
  if (frame == Frame::kWorld) {
    const AffineMap back = family.phi.Inverse();
    for (Point& v : vertices) v = back(v);
  }
  return Polygon(std::move(vertices));
}

double ClosureDefect(const PonceletFamily& family, double t) {
  const PonceletMap map(Circle(Point::Zero(), 1.0), family.inner_normalized);
  const PonceletMap::Orbit orbit = map.Trace(t, family.n);
  return (orbit.closing_vertex - orbit.vertices.front()).norm();
}

void CheckPeriod(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n || std::gcd(n, k) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need n >= 3, 1 <= k < n/2, gcd(n,k) = 1 (got n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
}

PonceletFamily CertifyFamily(const Conic& outer, const Conic& inner, int n, int k,
                             double closure_tol) {
  CheckPeriod(n, k);
  const PonceletMap world(outer, inner);
  if (world.Clearance() < detail::kMinClearance) {
    throw Error(ErrorCode::kDegenerate, "inner conic touches the outer conic (clearance " +
                                            std::to_string(world.Clearance()) + ")");
  }
  const NormalizedPair pair = NormalizeOuter(outer, inner);
  const PonceletMap map(Circle(Point::Zero(), 1.0), pair.inner);

  const PonceletMap::Orbit orbit = map.Trace(0.0, n);
  const double chord = (orbit.closing_vertex - orbit.vertices.front()).norm();
  const double angular = orbit.closing_lift - kTwoPi * k;

  // Whole periods keep the Birkhoff average free of the 1/N phase error.
  const int periods = (1000 + n - 1) / n;
  Flag f = map.Start(0.0);
  for (int i = 0; i < periods * n; ++i) f = map.Step(f);
  const double rho = f.lifted_angle / (kTwoPi * periods * n);

  if (!(chord <= closure_tol) || !(std::abs(rho - static_cast<double>(k) / n) < 1e-10)) {
    throw Error(ErrorCode::kNotPeriodic,
                "pair is not (" + std::to_string(n) + "," + std::to_string(k) +
                    ")-periodic: closure defect " + std::to_string(chord) + ", rho " +
                    std::to_string(rho));
  }
  return PonceletFamily{outer, inner, n, k, rho, chord, angular, pair.phi, pair.inner, "", 0.0};
}

}  // namespace poncelet
