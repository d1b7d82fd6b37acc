#include "family_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "config.hpp"
#include "poncelet/error.hpp"

namespace poncelet::cli {
namespace {

using nlohmann::json;

json ConicToJson(const Conic& c) {
  json m = json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.push_back(c.matrix()(i, j));
  }
  const EllipseParams& e = c.params();
  return {{"matrix", m},
          {"center", {e.center.x(), e.center.y()}},
          {"axes", {e.major, e.minor}},
          {"tilt", e.tilt}};
}

Conic ConicFromJson(const json& doc, const char* role) {
  const json& m = doc.at(role).at("matrix");
  if (!m.is_array() || m.size() != 9) {
    throw ConfigError(std::string("family: ") + role + ".matrix needs 9 numbers");
  }
  Eigen::Matrix3d mat;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) mat(i, j) = m.at(3 * i + j).get<double>();
  }
  return Conic::FromMatrix(mat);
}

}  // namespace

json FamilyToJson(const PonceletFamily& f) {
  const Eigen::Matrix2d& a = f.phi.linear();
  json doc = {
      {"format", "poncelet-family/1"},
      {"n", f.n},
      {"k", f.k},
      {"rho", f.rho},
      {"closure_defect", f.closure_defect},
      {"angular_defect", f.angular_defect},
      {"outer", ConicToJson(f.outer)},
      {"inner", ConicToJson(f.inner)},
      {"normalization",
       {{"linear", {a(0, 0), a(0, 1), a(1, 0), a(1, 1)}},
        {"translation", {f.phi.translation().x(), f.phi.translation().y()}}}},
  };
  if (!f.free_parameter.empty()) {
    doc["free_parameter"] = {{"name", f.free_parameter}, {"value", f.free_value}};
  }
  return doc;
}

PonceletFamily FamilyFromJson(const json& doc, double closure_tol, std::string* warning) {
  Conic outer = Circle(Point::Zero(), 1.0), inner = outer;
  int n = 0, k = 0;
  double stored_defect = 0.0;
  try {
    outer = ConicFromJson(doc, "outer");
    inner = ConicFromJson(doc, "inner");
    n = doc.at("n").get<int>();
    k = doc.at("k").get<int>();
    stored_defect = doc.at("closure_defect").get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("family: malformed document: ") + e.what());
  }
  PonceletFamily family = CertifyFamily(outer, inner, n, k, closure_tol);
  if (doc.contains("free_parameter")) {
    family.free_parameter = doc["free_parameter"].value("name", "");
    family.free_value = doc["free_parameter"].value("value", 0.0);
  }
  if (warning && !(std::abs(stored_defect - family.closure_defect) <= closure_tol)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "stored closure_defect %.3g disagrees with the measured %.3g; re-certified",
                  stored_defect, family.closure_defect);
    *warning = buf;
  }
  return family;
}

PonceletFamily LoadFamily(const std::string& path, double closure_tol, std::string* warning) {
  std::ifstream in(path);
  if (!in) throw ConfigError("MissingFamily: cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("family: " + path + " is not valid JSON: " + e.what());
  }
  return FamilyFromJson(doc, closure_tol, warning);
}

json ReportToJson(const VerificationReport& r) {
  return {{"check", r.check},
          {"measured", r.measured},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"negative_control", r.negative_control},
          {"skipped", r.skipped},
          {"context", r.context},
          {"note", r.note}};
}

json ReportsToJson(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const VerificationReport& r : reports) out.push_back(ReportToJson(r));
  return out;
}

}  // namespace poncelet::cli
