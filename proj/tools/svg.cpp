#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace poncelet::cli {
namespace {

std::string Num(double v) {
  if (std::abs(v) < 5e-11) v = 0.0;  // no "-0" or 1e-17 noise in the markup
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string EllipseElement(const Conic& c, const char* cls) {
  const EllipseParams& e = c.params();
  const double degrees = e.tilt * 180.0 / std::numbers::pi;
  return "<ellipse class=\"" + std::string(cls) + "\" cx=\"0\" cy=\"0\" rx=\"" + Num(e.major) +
         "\" ry=\"" + Num(e.minor) + "\" transform=\"translate(" + Num(e.center.x()) + " " +
         Num(e.center.y()) + ") rotate(" + Num(degrees) + ")\"/>";
}

std::string PathElement(const Polygon& p, const char* cls) {
  std::string d;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d += (i == 0 ? "M" : " L") + Num(p.vertex(i).x()) + " " + Num(p.vertex(i).y());
  }
  return "<path class=\"" + std::string(cls) + "\" d=\"" + d + " Z\"/>";
}

std::string Marker(const Point& p, const char* cls, double r) {
  return "<circle class=\"" + std::string(cls) + "\" cx=\"" + Num(p.x()) + "\" cy=\"" +
         Num(p.y()) + "\" r=\"" + Num(r) + "\"/>";
}

}  // namespace

std::string RenderFrame(const PonceletFamily& family, double t, const FrameOptions& options,
                        const std::vector<Point>& trace) {
  const Polygon polygon = OrbitPolygon(family, t);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"600\" height=\"600\">\n"
      << "<style>"
         ".outer,.inner{fill:none;stroke:#333;stroke-width:0.006}"
         ".polygon{fill:none;stroke:#1f5fa8;stroke-width:0.008}"
         ".contact{fill:none;stroke:#b0413e;stroke-width:0.005;stroke-dasharray:0.02 0.015}"
         ".cm0{fill:#000}.cm1{fill:#2a8a3a}.cm2{fill:#c07a00}.trace{fill:#555}"
         "</style>\n"
      << "<g transform=\"scale(1,-1)\">\n"
      << EllipseElement(Circle(Point::Zero(), 1.0), "outer") << "\n"
      << EllipseElement(family.inner_normalized, "inner") << "\n"
      << PathElement(polygon, "polygon") << "\n";
  if (options.contact) {
    out << PathElement(TangencyPolygon(polygon, family.inner_normalized), "contact") << "\n";
  }
  for (CenterKind kind : {CenterKind::kVertices, CenterKind::kEdges, CenterKind::kLamina}) {
    const std::string cls(CenterKindName(kind));
    out << Marker(CenterOfMass(polygon, kind), cls.c_str(), 0.015) << "\n";
  }
  for (const Point& p : trace) out << Marker(p, "trace", 0.004) << "\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace poncelet::cli
