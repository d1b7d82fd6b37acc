#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "poncelet/dynamics.hpp"
#include "poncelet/verify.hpp"

namespace poncelet::cli {

nlohmann::json FamilyToJson(const PonceletFamily& family);

/// Rebuilds the family from its conic matrices and re-certifies it; the
/// stored rho and closure defect are never trusted. When the stored closure
/// defect disagrees with the recomputed one by more than closure_tol,
/// `warning` receives a description. Throws ConfigError for malformed
/// documents and poncelet::Error (kNotPeriodic) when certification fails.
PonceletFamily FamilyFromJson(const nlohmann::json& doc, double closure_tol,
                              std::string* warning = nullptr);

PonceletFamily LoadFamily(const std::string& path, double closure_tol,
                          std::string* warning = nullptr);

nlohmann::json ReportToJson(const VerificationReport& report);
nlohmann::json ReportsToJson(const std::vector<VerificationReport>& reports);

}  // namespace poncelet::cli
