#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poncelet/locus.hpp"

namespace poncelet {

/// Outcome of one numerical check. Positive checks pass when measured is
/// below tolerance; negative controls (negative_control = true) pass when it
/// is above.
struct VerificationReport {
  std::string check;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool negative_control = false;
  /// Hypothesis of the check not met; not counted as a failure.
  bool skipped = false;
  std::string context;
  std::string note;
};

VerificationReport MakeReport(std::string check, double measured, double tolerance,
                              std::string context, bool negative_control = false);

/// Short description of a family, used as report context.
std::string Describe(const PonceletFamily& family);

/// Worst closure defect over `starts` seeded uniform starting angles.
VerificationReport VerifyPorism(const PonceletFamily& family, int starts, double tol,
                                std::uint64_t seed = 0);

struct MainTheoremResult {
  VerificationReport report;
  CircleFit fit;
  /// Image of the fitted circle under the inverse normalization; a point
  /// (zero axes) for point loci.
  EllipseParams world_ellipse;
  std::vector<LocusSample> samples;
};

/// For CM0/CM2: the normalized-frame locus must be a circle (max residual
/// below tol). For CM1 the report is a negative control that passes when the
/// residual exceeds 1e3 * tol.
MainTheoremResult VerifyTheoremMain(const PonceletFamily& family, CenterKind kind, int m,
                                    double tol);

/// Same axis ratio and tilt (circles always qualify).
bool AreHomothetic(const Conic& a, const Conic& b, double tol = 1e-9);

/// Max pairwise distance among CM0(Q_t) over m samples, without checking the
/// homothety hypothesis.
double WeillSpread(const PonceletFamily& family, int m, Point* mean = nullptr);

/// Skipped (hypothesis-not-met) unless the conics are homothetic.
VerificationReport VerifyWeill(const PonceletFamily& family, int m, double tol);

struct DualPonceletResult {
  VerificationReport tangency;
  /// CM0(Q_t) and CM2(Q_t) circle fits in the frame normalizing the inner
  /// conic.
  VerificationReport locus_cm0;
  VerificationReport locus_cm2;
  Conic dual;
};

DualPonceletResult VerifyDualPoncelet(const PonceletFamily& family, int m, double tol,
                                      double fit_tol);

/// Circle pairs only (otherwise skipped): relative spread of the invariant
/// measure of `steps` consecutive Poncelet steps.
VerificationReport VerifyMeasure(const PonceletFamily& family, int steps, double tol);

}  // namespace poncelet
