#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/affine.hpp"
#include "poncelet/verify.hpp"
#include "support.hpp"

using namespace poncelet;
using oracle::Gen;

namespace {

const Conic kUnit = Circle(Point::Zero(), 1.0);

PonceletFamily Eccentric() {
  InnerTemplate t;
  t.base_center = Point(0.2, 0.0);
  return FindPeriodicFamily(kUnit, t, 5, 1);
}

std::vector<Point> Points(const std::vector<LocusSample>& s, bool world = false) {
  std::vector<Point> out;
  for (const LocusSample& x : s) out.push_back(world ? x.point_world : x.point);
  return out;
}

}  // namespace

TEST_CASE("circle fit recovers exact circles and tolerates tiny noise") {
  Gen g(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Point c = g.Point(5.0);
    const double r = std::exp(g.Uniform(-8.0, 2.0));
    std::vector<Point> pts;
    const double arc = g.Uniform(0.5, 2.0 * std::numbers::pi);
    for (int i = 0; i < 40; ++i) {
      const double t = arc * i / 40;
      pts.push_back(c + r * Point(std::cos(t), std::sin(t)));
    }
    const CircleFit fit = FitCircle(pts);
    CHECK((fit.center - c).norm() < 1e-9 * std::max(1.0, r));
    CHECK(std::abs(fit.radius - r) < 1e-9 * std::max(1.0, r));
    CHECK(fit.max_residual < 1e-9 * std::max(1.0, r));

    // relabeling does not matter
    std::shuffle(pts.begin(), pts.end(), g.rng());
    CHECK((FitCircle(pts).center - fit.center).norm() < 1e-10 * std::max(1.0, r));

    if (r > 1e-2) {
      std::vector<Point> noisy = pts;
      for (Point& p : noisy) p += g.Point(1e-10);
      const CircleFit nf = FitCircle(noisy);
      CHECK((nf.center - fit.center).norm() < 1e-8);
      CHECK(nf.max_residual < 1e-8);
    }
  }
}

TEST_CASE("circle fit edge cases") {
  std::vector<Point> cluster(10, Point(0.3, -0.1));
  cluster[3] += Point(1e-12, 0.0);
  const CircleFit point = FitCircle(cluster);
  CHECK(point.radius == 0.0);
  CHECK((point.center - Point(0.3, -0.1)).norm() < 1e-12);

  std::vector<Point> line;
  for (int i = 0; i < 10; ++i) line.push_back(Point(i, 2.0 * i));
  CHECK(ErrorCodeOf([&] { FitCircle(line); }) == ErrorCode::kCollinearPoints);
  CHECK(ErrorCodeOf([] { FitCircle(std::vector<Point>{{0, 0}, {1, 0}}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(Spread(std::vector<Point>{{0, 0}, {3, 4}, {1, 1}}) == doctest::Approx(5.0));
}

TEST_CASE("regular families have point loci") {
  for (int n : {3, 5, 7}) {
    InnerTemplate t;
    const PonceletFamily f = FindPeriodicFamily(kUnit, t, n, 1);
    for (CenterKind kind : {CenterKind::kVertices, CenterKind::kEdges, CenterKind::kLamina}) {
      const CircleFit fit = FitCircle(Points(SampleLocus(f, kind, 64)));
      CHECK(fit.radius < 1e-8);
      CHECK(fit.center.norm() < 1e-8);
    }
  }
}

TEST_CASE("sampled centroids match brute-force centroids of the traced polygon") {
  const PonceletFamily f = Eccentric();
  const auto cm0 = SampleLocus(f, CenterKind::kVertices, 8);
  const auto cm1 = SampleLocus(f, CenterKind::kEdges, 8);
  const auto cm2 = SampleLocus(f, CenterKind::kLamina, 8);
  for (int j = 0; j < 8; ++j) {
    const std::vector<Point> v = OrbitPolygon(f, cm0[j].t).vertices();
    CHECK((cm0[j].point - oracle::VertexMean(v)).norm() < 1e-14);
    CHECK((cm1[j].point - oracle::EdgeCentroidSampled(v)).norm() < 1e-9);
    CHECK((cm2[j].point - oracle::LaminaCentroidScanline(v, 200000)).norm() < 1e-6);
  }
}

TEST_CASE("eccentric family: CM0 and CM2 run on different circles") {
  const PonceletFamily f = Eccentric();
  const CircleFit cm0 = FitCircle(Points(SampleLocus(f, CenterKind::kVertices, 256)));
  const CircleFit cm2 = FitCircle(Points(SampleLocus(f, CenterKind::kLamina, 256)));
  CHECK(cm0.max_residual < 1e-6);
  CHECK(cm2.max_residual < 1e-6);
  CHECK(cm0.radius > 1e-4);
  CHECK(cm2.radius > 1e-4);
  CHECK((cm0.center - cm2.center).norm() > 1e-4);
  // the circles are symmetric about the line of centers
  CHECK(std::abs(cm0.center.y()) < 1e-12);
  CHECK(std::abs(cm2.center.y()) < 1e-12);
}

TEST_CASE("world-frame points are the affine images for CM0 and CM2") {
  const Conic outer = ConicFromEllipse(Point(0.3, -0.2), 2.0, 1.0, 0.4);
  InnerTemplate t;
  t.base_center = Point(0.4, -0.2);
  t.axis_ratio = 0.7;
  t.tilt = 0.4;
  const PonceletFamily f = FindPeriodicFamily(outer, t, 5, 1);
  const AffineMap back = f.phi.Inverse();
  for (CenterKind kind : {CenterKind::kVertices, CenterKind::kLamina}) {
    for (const LocusSample& s : SampleLocus(f, kind, 32)) {
      CHECK((back(s.point) - s.point_world).norm() < 1e-12);
    }
  }
  double worst = 0.0;
  for (const LocusSample& s : SampleLocus(f, CenterKind::kEdges, 32)) {
    worst = std::max(worst, (back(s.point) - s.point_world).norm());
  }
  // the edge centroid is not affine-natural, so the two frames disagree
  CHECK(worst > 1e-4);
}

TEST_CASE("contact polygons between homothetic conics keep a fixed vertex centroid") {
  InnerTemplate t;
  t.radius = 0.4;
  t.free = FreeParameter::kCenterOffset;
  const PonceletFamily f = FindPeriodicFamily(kUnit, t, 3, 1);
  Point mean;
  CHECK(WeillSpread(f, 256, &mean) < 1e-8);
  CHECK(std::abs(mean.y()) < 1e-12);

  const auto q = SampleLocus(f, CenterKind::kVertices, 16, /*use_contact_polygon=*/true);
  for (const LocusSample& s : q) CHECK((s.point_world - mean).norm() < 1e-8);
}

TEST_CASE("sample count and spacing") {
  const PonceletFamily f = Eccentric();
  CHECK(ErrorCodeOf([&] { SampleLocus(f, CenterKind::kVertices, 0); }) ==
        ErrorCode::kInvalidArgument);
  const auto samples = SampleLocus(f, CenterKind::kVertices, 4);
  REQUIRE(samples.size() == 4);
  CHECK(samples[1].t == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("fit is stable under doubling the sample count") {
  const PonceletFamily f = Eccentric();
  for (CenterKind kind : {CenterKind::kVertices, CenterKind::kLamina}) {
    const CircleFit a = FitCircle(Points(SampleLocus(f, kind, 128)));
    const CircleFit b = FitCircle(Points(SampleLocus(f, kind, 256)));
    CHECK((a.center - b.center).norm() < 1e-8);
    CHECK(std::abs(a.radius - b.radius) < 1e-8);
  }
}

TEST_CASE("a similarity of the whole picture leaves the normalized fit unchanged") {
  const Conic outer = ConicFromEllipse(Point(0.3, -0.2), 2.0, 1.0, 0.4);
  InnerTemplate t;
  t.base_center = Point(0.4, -0.2);
  t.axis_ratio = 0.7;
  t.tilt = 0.4;
  const PonceletFamily f = FindPeriodicFamily(outer, t, 5, 1);
  Gen g(42);
  for (int trial = 0; trial < 5; ++trial) {
    const AffineMap s = AffineMap::Similarity(g.Uniform(0.3, 3.0), g.Uniform(-0.5, 0.5), g.Point(2.0));
    const PonceletFamily moved =
        CertifyFamily(PushForward(f.outer, s), PushForward(f.inner, s), f.n, f.k);
    for (CenterKind kind : {CenterKind::kVertices, CenterKind::kLamina}) {
      const CircleFit a = FitCircle(Points(SampleLocus(f, kind, 256)));
      const CircleFit b = FitCircle(Points(SampleLocus(moved, kind, 256)));
      // the normalized frames agree up to the symmetries of the unit circle
      CHECK(std::abs(a.radius - b.radius) < 1e-8);
      CHECK(std::abs(a.center.norm() - b.center.norm()) < 1e-8);
      CHECK(std::abs(a.max_residual - b.max_residual) < 1e-8);
      // world-frame loci move with the similarity
      const auto wa = SampleLocus(f, kind, 16);
      const CircleFit wfit = FitCircle(Points(SampleLocus(moved, kind, 256)));
      for (const LocusSample& x : wa) {
        const Point image = s(x.point_world);
        const Point in_moved = moved.phi(image);
        CHECK(std::abs((in_moved - wfit.center).norm() - wfit.radius) < 1e-8);
      }
    }
  }
}

TEST_CASE("homothetic ellipses, concentric or not, have a Weill point") {
  const Conic outer = ConicFromEllipse(Point(0.0, 0.0), 2.0, 1.0, 0.3);
  for (Point base : {Point(0.0, 0.0), Point(0.1, 0.03), Point(0.29, 0.14)}) {
    InnerTemplate t;
    t.base_center = base;
    t.axis_ratio = 0.5;
    t.tilt = 0.3;
    const PonceletFamily f = FindPeriodicFamily(outer, t, 5, 1);
    REQUIRE(AreHomothetic(f.outer, f.inner));
    CHECK(WeillSpread(f, 256) < 1e-8);
  }
  // without the hypothesis the contact centroid moves
  InnerTemplate t;
  t.base_center = Point(0.2, 0.1);
  t.axis_ratio = 0.5;
  t.tilt = 0.5;
  const PonceletFamily skew = FindPeriodicFamily(kUnit, t, 3, 1);
  CHECK_FALSE(AreHomothetic(skew.outer, skew.inner));
  CHECK(WeillSpread(skew, 256) > 1e-3);
  CHECK(VerifyWeill(skew, 64, 1e-8).skipped);
}

TEST_CASE("contact polygons form a Poncelet family of their own") {
  const PonceletFamily f = Eccentric();
  const Conic dual = DualConicWrt(f.outer, f.inner);
  const PonceletFamily q = CertifyFamily(f.inner, dual, f.n, f.k);
  CHECK(q.closure_defect < 1e-8);

  const DualPonceletResult d = VerifyDualPoncelet(f, 64, 1e-8, 1e-6);
  CHECK(d.tangency.pass);
  CHECK(d.locus_cm0.pass);
  CHECK(d.locus_cm2.pass);
  CHECK(MatrixDistance(DualConicWrt(d.dual, f.inner), f.outer) < 1e-9);

  InnerTemplate regular;
  const PonceletFamily pentagon = FindPeriodicFamily(kUnit, regular, 5, 1);
  CHECK(VerifyDualPoncelet(pentagon, 16, 1e-10, 1e-6).tangency.measured < 1e-10);
}
