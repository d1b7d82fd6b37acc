#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "poncelet/error.hpp"

namespace poncelet::cli {
namespace {

namespace pt = boost::property_tree;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Section {
 public:
  Section(const pt::ptree& root, std::string name, std::set<std::string> allowed)
      : name_(std::move(name)) {
    if (auto child = root.get_child_optional(name_)) tree_ = *child;
    for (const auto& [key, value] : tree_) {
      if (!value.empty()) {
        throw ConfigError("config: unexpected nesting under [" + name_ + "] " + key);
      }
      if (!allowed.count(key)) {
        throw ConfigError("config: unknown field [" + name_ + "] " + key);
      }
    }
  }

  bool Has(const std::string& key) const { return tree_.get_optional<std::string>(key).has_value(); }

  std::string Raw(const std::string& key) const {
    auto v = tree_.get_optional<std::string>(key);
    if (!v) throw ConfigError("config: missing field [" + name_ + "] " + key);
    return *v;
  }

  double Number(const std::string& key) const {
    std::istringstream in(Raw(key));
    double v = 0.0;
    std::string rest;
    if (!(in >> v) || (in >> rest)) {
      throw ConfigError("config: field [" + name_ + "] " + key + " is not a number");
    }
    return v;
  }

  long long Integer(const std::string& key) const {
    const double v = Number(key);
    if (v != static_cast<double>(static_cast<long long>(v))) {
      throw ConfigError("config: field [" + name_ + "] " + key + " must be an integer");
    }
    return static_cast<long long>(v);
  }

  Point Pair(const std::string& key) const {
    std::istringstream in(Raw(key));
    double x = 0.0, y = 0.0;
    std::string rest;
    if (!(in >> x >> y) || (in >> rest)) {
      throw ConfigError("config: field [" + name_ + "] " + key + " needs two numbers");
    }
    return {x, y};
  }

 private:
  std::string name_;
  pt::ptree tree_;
};

EllipseSpec ReadEllipse(const Section& s) {
  EllipseSpec e;
  if (s.Has("center")) e.center = s.Pair("center");
  const Point axes = s.Pair("axes");
  e.major = axes.x();
  e.minor = axes.y();
  if (s.Has("tilt")) e.tilt = s.Number("tilt");
  return e;
}

void WriteEllipse(std::ostringstream& out, const EllipseSpec& e) {
  out << "center = " << Num(e.center.x()) << " " << Num(e.center.y()) << "\n";
  out << "axes = " << Num(e.major) << " " << Num(e.minor) << "\n";
  out << "tilt = " << Num(e.tilt) << "\n";
}

Conic MakeConic(const EllipseSpec& e, const char* role) {
  try {
    return ConicFromEllipse(e.center, e.major, e.minor, e.tilt);
  } catch (const Error& err) {
    throw ConfigError(std::string("config: [") + role + "] " + err.what());
  }
}

}  // namespace

RunConfig ParseConfig(const std::string& text) {
  pt::ptree root;
  try {
    std::istringstream in(text);
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config: line " + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [key, value] : root) {
    if (key != "outer" && key != "inner" && key != "run") {
      throw ConfigError("config: unknown section or field '" + key + "'");
    }
  }
  const Section outer(root, "outer", {"center", "axes", "tilt"});
  const Section inner(root, "inner", {"center", "axes", "tilt", "free", "direction"});
  const Section run(root, "run",
                    {"n", "k", "samples", "seed", "tol_closure", "tol_fit", "family_out",
                     "locus_out", "report_out", "render_dir"});

  RunConfig c;
  c.outer = ReadEllipse(outer);
  c.inner = ReadEllipse(inner);
  if (inner.Has("free")) {
    const std::string mode = inner.Raw("free");
    if (mode == "none") {
      c.free = FreeMode::kNone;
    } else if (mode == "radius") {
      c.free = FreeMode::kRadius;
    } else if (mode == "offset") {
      c.free = FreeMode::kOffset;
    } else {
      throw ConfigError("config: field [inner] free must be none, radius or offset");
    }
  }
  if (inner.Has("direction")) c.direction = inner.Pair("direction");

  c.n = static_cast<int>(run.Integer("n"));
  if (run.Has("k")) c.k = static_cast<int>(run.Integer("k"));
  if (run.Has("samples")) c.samples = static_cast<int>(run.Integer("samples"));
  if (run.Has("seed")) c.seed = static_cast<std::uint64_t>(run.Integer("seed"));
  if (run.Has("tol_closure")) c.tolerances["closure"] = run.Number("tol_closure");
  if (run.Has("tol_fit")) c.tolerances["fit"] = run.Number("tol_fit");
  for (const char* key : {"family_out", "locus_out", "report_out", "render_dir"}) {
    if (run.Has(key)) c.outputs[key] = run.Raw(key);
  }

  try {
    CheckPeriod(c.n, c.k);
  } catch (const Error& e) {
    throw ConfigError(std::string("config: [run] n/k: ") + e.what());
  }
  if (c.samples < 1) throw ConfigError("config: field [run] samples must be positive");
  return c;
}

RunConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string EmitConfig(const RunConfig& c) {
  std::ostringstream out;
  out << "[outer]\n";
  WriteEllipse(out, c.outer);
  out << "\n[inner]\n";
  WriteEllipse(out, c.inner);
  out << "free = "
      << (c.free == FreeMode::kNone ? "none" : c.free == FreeMode::kRadius ? "radius" : "offset")
      << "\n";
  out << "direction = " << Num(c.direction.x()) << " " << Num(c.direction.y()) << "\n";
  out << "\n[run]\n";
  out << "n = " << c.n << "\nk = " << c.k << "\nsamples = " << c.samples << "\nseed = " << c.seed
      << "\n";
  out << "tol_closure = " << Num(c.tolerances.at("closure")) << "\n";
  out << "tol_fit = " << Num(c.tolerances.at("fit")) << "\n";
  for (const auto& [key, value] : c.outputs) out << key << " = " << value << "\n";
  return out.str();
}

Conic RunConfig::OuterConic() const { return MakeConic(outer, "outer"); }

Conic RunConfig::InnerConic() const { return MakeConic(inner, "inner"); }

InnerTemplate RunConfig::Template() const {
  if (!(inner.major > 0.0) || !(inner.minor > 0.0)) {
    throw ConfigError("config: [inner] axes must be positive");
  }
  InnerTemplate t;
  t.base_center = inner.center;
  t.radius = inner.major;
  t.axis_ratio = inner.minor / inner.major;
  t.tilt = inner.tilt;
  t.direction = direction;
  t.free = free == FreeMode::kOffset ? FreeParameter::kCenterOffset : FreeParameter::kRadius;
  return t;
}

PonceletFamily SolveFamily(const RunConfig& config) {
  const Conic outer = config.OuterConic();
  if (config.free == FreeMode::kNone) {
    return CertifyFamily(outer, config.InnerConic(), config.n, config.k,
                         config.tolerances.at("closure"));
  }
  return FindPeriodicFamily(outer, config.Template(), config.n, config.k);
}

}  // namespace poncelet::cli
