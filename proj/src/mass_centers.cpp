#include "poncelet/mass_centers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "poncelet/error.hpp"

namespace poncelet {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

struct CompensatedPoint {
  CompensatedSum x, y;
  void Add(const Point& p) {
    x.Add(p.x());
    y.Add(p.y());
  }
  Point Value() const { return {x.Value(), y.Value()}; }
};

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "polygon needs at least 3 vertices");
  }
  lengths_.resize(n);
  cross_.resize(n);
  CompensatedSum perimeter, twice_area;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (!a.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument, "polygon vertex is not finite");
    }
    lengths_[i] = (b - a).norm();
    cross_[i] = a.x() * b.y() - b.x() * a.y();
    perimeter.Add(lengths_[i]);
    twice_area.Add(cross_[i]);
  }
  perimeter_ = perimeter.Value();
  area_ = 0.5 * twice_area.Value();
}

double Polygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, (vertices_[i] - vertices_[j]).norm());
    }
  }
  return best;
}

Polygon Polygon::Reversed() const {
  return Polygon(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

Polygon Polygon::Rotated(std::size_t shift) const {
  std::vector<Point> v = vertices_;
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift % v.size()), v.end());
  return Polygon(std::move(v));
}

Polygon Polygon::Transformed(const AffineMap& phi) const {
  std::vector<Point> v;
  v.reserve(vertices_.size());
  for (const Point& p : vertices_) v.push_back(phi(p));
  return Polygon(std::move(v));
}

std::string_view CenterKindName(CenterKind kind) {
  switch (kind) {
    case CenterKind::kVertices: return "cm0";
    case CenterKind::kEdges: return "cm1";
    case CenterKind::kLamina: return "cm2";
  }
  return "?";
}

CenterKind ParseCenterKind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cm0") return CenterKind::kVertices;
  if (lower == "cm1") return CenterKind::kEdges;
  if (lower == "cm2") return CenterKind::kLamina;
  throw Error(ErrorCode::kInvalidArgument, "unknown center kind '" + std::string(name) + "'");
}

Point CenterOfMass(const Polygon& p, CenterKind kind) {
  const std::size_t n = p.size();
  CompensatedPoint acc;
  switch (kind) {
    case CenterKind::kVertices: {
      for (const Point& v : p.vertices()) acc.Add(v);
      return acc.Value() / static_cast<double>(n);
    }
    case CenterKind::kEdges: {
      if (!(p.perimeter() > 1e-12)) {
        throw Error(ErrorCode::kZeroPerimeter, "edge centroid undefined: perimeter L(P) = " +
                                                   std::to_string(p.perimeter()));
      }
      for (std::size_t i = 0; i < n; ++i) {
        acc.Add(p.side_lengths()[i] * (p.vertex(i) + p.vertex(i + 1)));
      }
      return acc.Value() / (2.0 * p.perimeter());
    }
    case CenterKind::kLamina: {
      // Same sums taken about the vertex centroid; translation only changes
      // the rounding, not the value.
      CompensatedPoint mean;
      for (const Point& v : p.vertices()) mean.Add(v);
      const Point origin = mean.Value() / static_cast<double>(n);
      CompensatedSum twice_area;
      for (std::size_t i = 0; i < n; ++i) {
        const Point a = p.vertex(i) - origin, b = p.vertex(i + 1) - origin;
        const double d = a.x() * b.y() - b.x() * a.y();
        twice_area.Add(d);
        acc.Add(d * (a + b));
      }
      const double area = 0.5 * twice_area.Value();
      const double diam = p.diameter();
      if (!(std::abs(area) >= 1e-12 * diam * diam) || area == 0.0) {
        throw Error(ErrorCode::kZeroSignedArea,
                    "lamina centroid undefined: signed area A(P) = " + std::to_string(area));
      }
      return origin + acc.Value() / (6.0 * area);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown center kind");
}

Polygon TangencyPolygon(const Polygon& p, const Conic& inner, double tol) {
  std::vector<Point> contacts;
  contacts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Line edge = Line::Through(p.vertex(i), p.vertex(i + 1));
    const double defect = TangencyDefect(inner, edge);
    if (!(defect <= tol)) {
      throw Error(ErrorCode::kEdgeNotTangent, "edge " + std::to_string(i) +
                                                  " is not tangent (defect " +
                                                  std::to_string(defect) + ")");
    }
    contacts.push_back(PoleOfLine(inner, edge));
  }
  return Polygon(std::move(contacts));
}

}  // namespace poncelet
