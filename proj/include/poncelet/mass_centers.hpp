#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "poncelet/affine.hpp"
#include "poncelet/conic.hpp"

namespace poncelet {

/// Closed polygon with cyclic vertex indexing. Side lengths, cross terms
/// d_i = x_i y_{i+1} - x_{i+1} y_i, perimeter and signed area are computed
/// once from the vertices; sums use compensated accumulation.
class Polygon {
 public:
  /// Throws kInvalidArgument for fewer than 3 vertices or non-finite input.
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  const std::vector<double>& side_lengths() const { return lengths_; }
  const std::vector<double>& cross_terms() const { return cross_; }
  double perimeter() const { return perimeter_; }
  /// Half the sum of cross terms: area counted with sign and multiplicity.
  double signed_area() const { return area_; }
  /// Largest vertex-to-vertex distance.
  double diameter() const;

  Polygon Reversed() const;
  /// Same cycle starting at vertex `shift`.
  Polygon Rotated(std::size_t shift) const;
  Polygon Transformed(const AffineMap& phi) const;

 private:
  std::vector<Point> vertices_;
  std::vector<double> lengths_;
  std::vector<double> cross_;
  double perimeter_ = 0.0;
  double area_ = 0.0;
};

enum class CenterKind {
  kVertices,  // CM0
  kEdges,     // CM1, uniform density per unit length
  kLamina,    // CM2, signed-area weighted
};

std::string_view CenterKindName(CenterKind kind);
/// Accepts "cm0", "cm1", "cm2" (case-insensitive). Throws kInvalidArgument.
CenterKind ParseCenterKind(std::string_view name);

/// Throws kZeroPerimeter (CM1) or kZeroSignedArea (CM2, when
/// |A| < 1e-12 diam^2).
Point CenterOfMass(const Polygon& p, CenterKind kind);

/// Polygon of contact points of the edges of p with the conic inner. Edge i
/// joins vertex i and vertex i+1, and contributes vertex i of the result.
/// Throws kEdgeNotTangent when an edge's tangency defect exceeds tol.
Polygon TangencyPolygon(const Polygon& p, const Conic& inner, double tol = 1e-8);

}  // namespace poncelet
