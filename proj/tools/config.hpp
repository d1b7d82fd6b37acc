#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "poncelet/dynamics.hpp"

namespace poncelet::cli {

/// Malformed or incomplete run configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EllipseSpec {
  Point center = Point::Zero();
  double major = 1.0;
  double minor = 1.0;
  double tilt = 0.0;

  bool operator==(const EllipseSpec& o) const {
    return center == o.center && major == o.major && minor == o.minor && tilt == o.tilt;
  }
};

enum class FreeMode { kNone, kRadius, kOffset };

/// Flat key = value text with [outer], [inner] and [run] sections:
///
///   [outer]
///   center = 0 0
///   axes = 1 1
///   tilt = 0
///   [inner]
///   center = 0.2 0
///   axes = 0.5 0.5
///   free = radius
///   direction = 1 0
///   [run]
///   n = 5
///   k = 1
///   samples = 256
///   seed = 0
///   tol_closure = 1e-8
///   tol_fit = 1e-6
///   family_out = fam.json
///
/// `free` is none, radius or offset. With free = radius the inner axes only
/// fix the shape (axis ratio); with free = offset the inner center is the
/// zero-offset position and `direction` the direction of travel. Comment
/// lines start with ';'.
struct RunConfig {
  EllipseSpec outer;
  EllipseSpec inner;
  FreeMode free = FreeMode::kNone;
  Point direction = Point(1.0, 0.0);
  int n = 0;
  int k = 1;
  int samples = 256;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances = {{"closure", 1e-8}, {"fit", 1e-6}};
  std::map<std::string, std::string> outputs;

  Conic OuterConic() const;
  /// Inner conic as written (free = none).
  Conic InnerConic() const;
  InnerTemplate Template() const;

  bool operator==(const RunConfig& o) const {
    return outer == o.outer && inner == o.inner && free == o.free && direction == o.direction &&
           n == o.n && k == o.k && samples == o.samples && seed == o.seed &&
           tolerances == o.tolerances && outputs == o.outputs;
  }
};

RunConfig ParseConfig(const std::string& text);
RunConfig LoadConfig(const std::string& path);
std::string EmitConfig(const RunConfig& config);

/// Solves (free = radius/offset) or certifies (free = none) the family.
PonceletFamily SolveFamily(const RunConfig& config);

}  // namespace poncelet::cli
