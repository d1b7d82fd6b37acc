#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "poncelet/dynamics.hpp"
#include "support.hpp"

using namespace poncelet;
using oracle::Gen;

namespace {

const Conic kUnit = Circle(Point::Zero(), 1.0);

InnerTemplate RadiusTemplate(Point center, double ratio = 1.0, double tilt = 0.0) {
  InnerTemplate t;
  t.base_center = center;
  t.axis_ratio = ratio;
  t.tilt = tilt;
  t.free = FreeParameter::kRadius;
  return t;
}

InnerTemplate OffsetTemplate(double radius, Point direction = Point(1.0, 0.0)) {
  InnerTemplate t;
  t.radius = radius;
  t.direction = direction;
  t.free = FreeParameter::kCenterOffset;
  return t;
}

/// Random nested pair: an ellipse outer and a small ellipse well inside it.
std::pair<Conic, Conic> NestedPair(Gen& g) {
  const Point c = g.Point(1.0);
  const double a = g.Uniform(0.8, 2.0), b = g.Uniform(0.8, 2.0), tilt = g.Uniform(-1.5, 1.5);
  const double s = g.Uniform(0.1, 0.35);
  const Point offset = oracle::EllipsePoint(Point::Zero(), a * s, b * s, tilt, g.Uniform(0, 6.3));
  return {ConicFromEllipse(c, a, b, tilt),
          ConicFromEllipse(c + offset, s * a * g.Uniform(0.5, 1.0), s * b, g.Uniform(-1.5, 1.5))};
}

bool SameFlag(const Flag& f, const Flag& g, double tol) {
  if ((f.vertex - g.vertex).norm() > tol) return false;
  if (f.incoming.has_value() != g.incoming.has_value()) return false;
  return !f.incoming || f.incoming->SameAs(*g.incoming, tol);
}

}  // namespace

TEST_CASE("sigma and tau are involutions") {
  Gen g(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto [outer, inner] = NestedPair(g);
    const PonceletMap map(outer, inner);
    Flag f = map.Start(g.Uniform(0.0, 6.3));
    for (int i = 0; i < 3; ++i) f = map.Step(f);
    CHECK(SameFlag(map.Sigma(map.Sigma(f)), f, 1e-9));
    CHECK(SameFlag(map.Tau(map.Tau(f)), f, 1e-9));
    // the lift returns to where it started after sigma twice
    CHECK(std::abs(map.Sigma(map.Sigma(f)).lifted_angle - f.lifted_angle) < 1e-9);
  }
}

TEST_CASE("each step moves forward along the outer conic") {
  Gen g(32);
  for (int trial = 0; trial < 50; ++trial) {
    auto [outer, inner] = NestedPair(g);
    const PonceletMap map(outer, inner);
    Flag f = map.Start(0.0);
    for (int i = 0; i < 20; ++i) {
      const Flag next = map.Step(f);
      CHECK(next.lifted_angle > f.lifted_angle);
      CHECK(next.lifted_angle - f.lifted_angle < 2.0 * std::numbers::pi);
      CHECK(std::abs(Evaluate(outer, next.vertex)) < 1e-12);
      CHECK(TangencyDefect(inner, Line::Through(f.vertex, next.vertex)) < 1e-10);
      f = next;
    }
  }
}

TEST_CASE("concentric rotation number matches arccos(r) / pi") {
  Gen g(33);
  for (int trial = 0; trial < 20; ++trial) {
    const double r = g.Uniform(0.05, 0.95);
    CHECK(std::abs(RotationNumber(kUnit, Circle(Point::Zero(), r), 1000) -
                   oracle::ConcentricRotationNumber(r)) < 1e-9);
  }
}

TEST_CASE("rotation number decreases as the inner circle grows") {
  double previous = 1.0;
  for (int i = 0; i <= 20; ++i) {
    const double r = 0.05 + 0.7 * i / 20;
    const double rho = RotationNumber(kUnit, Circle(Point(0.2, 0.0), r), 4000);
    CHECK(rho < previous);
    CHECK(rho > 0.0);
    CHECK(rho < 0.5);
    previous = rho;
  }
}

TEST_CASE("regular families between concentric circles") {
  for (auto [n, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {5, 2}, {7, 3}, {8, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    const PonceletFamily f = FindPeriodicFamily(kUnit, RadiusTemplate(Point::Zero()), n, k);
    CHECK(std::abs(f.free_value - std::cos(std::numbers::pi * k / n)) < 1e-9);
    CHECK(std::abs(f.rho - static_cast<double>(k) / n) < 1e-9);
    CHECK(f.closure_defect < 1e-8);
    CHECK(f.free_parameter == "radius");
  }
}

TEST_CASE("offset solutions agree with the Euler and Fuss relations") {
  const PonceletFamily tri = FindPeriodicFamily(kUnit, OffsetTemplate(0.4), 3, 1);
  CHECK(std::abs(tri.free_value - oracle::EulerOffset(1.0, 0.4)) < 1e-9);
  CHECK(std::abs(tri.free_value - std::sqrt(0.2)) < 1e-9);
  CHECK(tri.free_parameter == "offset");

  const PonceletFamily quad = FindPeriodicFamily(kUnit, OffsetTemplate(0.5), 4, 1);
  CHECK(std::abs(quad.free_value - oracle::FussOffset(1.0, 0.5)) < 1e-9);

  // a skewed direction only rotates the picture
  const PonceletFamily diag =
      FindPeriodicFamily(kUnit, OffsetTemplate(0.4, Point(1.0, 1.0)), 3, 1);
  CHECK(std::abs(diag.free_value - oracle::EulerOffset(1.0, 0.4)) < 1e-9);
}

TEST_CASE("porism: every start closes") {
  const PonceletFamily f = FindPeriodicFamily(kUnit, RadiusTemplate(Point(0.2, 0.0)), 5, 1);
  Gen g(34);
  for (int i = 0; i < 64; ++i) CHECK(ClosureDefect(f, g.Uniform(0.0, 2.0 * std::numbers::pi)) < 1e-8);

  const Conic outer = ConicFromEllipse(Point(0.3, -0.2), 2.0, 1.0, 0.4);
  const PonceletFamily e =
      FindPeriodicFamily(outer, RadiusTemplate(Point(0.4, -0.2), 0.7, 0.4), 5, 1);
  for (int i = 0; i < 64; ++i) CHECK(ClosureDefect(e, g.Uniform(0.0, 2.0 * std::numbers::pi)) < 1e-8);
  CHECK(std::abs(RotationNumber(e.outer, e.inner, 1000) - 0.2) < 1e-9);
}

TEST_CASE("world and normalized orbit polygons correspond under the normalization") {
  const Conic outer = ConicFromEllipse(Point(0.3, -0.2), 2.0, 1.0, 0.4);
  const PonceletFamily f =
      FindPeriodicFamily(outer, RadiusTemplate(Point(0.4, -0.2), 0.7, 0.4), 5, 1);
  for (double t : {0.0, 1.1, 2.9, 5.0}) {
    const Polygon world = OrbitPolygon(f, t, Frame::kWorld);
    const Polygon normalized = OrbitPolygon(f, t, Frame::kNormalized);
    REQUIRE(world.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK((f.phi(world.vertex(i)) - normalized.vertex(i)).norm() < 1e-12);
      CHECK(std::abs(Evaluate(f.outer, world.vertex(i))) < 1e-12);
      CHECK(std::abs(normalized.vertex(i).norm() - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("certification rejects what does not close") {
  CHECK(ErrorCodeOf([] { CertifyFamily(kUnit, Circle(Point(0.1, 0.0), 0.4), 5, 1); }) ==
        ErrorCode::kNotPeriodic);
  const PonceletFamily f = CertifyFamily(kUnit, Circle(Point::Zero(), 0.5), 3, 1);
  CHECK(f.closure_defect < 1e-12);
  CHECK(std::abs(f.rho - 1.0 / 3) < 1e-9);
}

TEST_CASE("period and nesting preconditions") {
  for (auto [n, k] : {std::pair{2, 1}, {5, 0}, {6, 3}, {6, 2}, {5, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    CHECK(ErrorCodeOf([n = n, k = k] { CheckPeriod(n, k); }) == ErrorCode::kInvalidArgument);
  }
  CHECK(ErrorCodeOf([] { PonceletMap(kUnit, Circle(Point(0.5, 0.0), 0.6)); }) ==
        ErrorCode::kDegenerate);
  CHECK(ErrorCodeOf([] { PonceletMap(kUnit, Circle(Point(2.0, 0.0), 0.3)); }) ==
        ErrorCode::kDegenerate);

  const PonceletMap map(kUnit, Circle(Point::Zero(), 0.5));
  Flag inside;
  inside.vertex = Point(0.1, 0.0);
  CHECK(ErrorCodeOf([&] { map.Tau(inside); }) == ErrorCode::kVertexInsideInner);

  // the triangle needs an offset of 0.894, beyond what a radius-0.1 circle
  // can reach inside the admissible bracket
  CHECK(ErrorCodeOf([] { FindPeriodicFamily(kUnit, OffsetTemplate(0.1), 3, 1); }) ==
        ErrorCode::kNoBracket);
}

TEST_CASE("invariant measure between circles") {
  SUBCASE("tangent length") {
    CHECK(TangentLength(kUnit, Point(2.0, 0.0)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(TangentLength(kUnit, Point(0.0, 1.0)) == 0.0);
    CHECK(ErrorCodeOf([] { TangentLength(kUnit, Point(0.5, 0.0)); }) == ErrorCode::kInteriorPoint);
    CHECK(ErrorCodeOf([] { TangentLength(ConicFromEllipse(Point::Zero(), 2, 1, 0), Point(3, 0)); }) ==
          ErrorCode::kNotACircle);
  }

  SUBCASE("concentric closed form") {
    for (double r : {0.2, 0.5, 0.8}) {
      const Conic inner = Circle(Point::Zero(), r);
      const PonceletMap map(kUnit, inner);
      const Flag a = map.Start(0.3);
      const Flag b = map.Step(a);
      CHECK(std::abs(MeasureOfArc(kUnit, inner, a.lifted_angle, b.lifted_angle) -
                     oracle::ConcentricStepMeasure(r)) < 1e-9);
    }
  }

  SUBCASE("preserved along an eccentric orbit") {
    Gen g(35);
    for (int trial = 0; trial < 5; ++trial) {
      const Conic inner = Circle(g.Point(0.25), g.Uniform(0.2, 0.5));
      const PonceletMap map(kUnit, inner);
      Flag f = map.Start(g.Uniform(0.0, 6.0));
      Flag next = map.Step(f);
      const double first = MeasureOfArc(kUnit, inner, f.lifted_angle, next.lifted_angle);
      for (int i = 0; i < 30; ++i) {
        f = next;
        next = map.Step(f);
        CHECK(std::abs(MeasureOfArc(kUnit, inner, f.lifted_angle, next.lifted_angle) / first - 1.0) <
              1e-9);
      }
    }
  }
}
