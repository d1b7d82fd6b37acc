#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poncelet/error.hpp"
#include "poncelet/verify.hpp"

namespace py = pybind11;
using namespace poncelet;

namespace {

Polygon ToPolygon(const Eigen::MatrixX2d& v) {
  std::vector<Point> pts;
  for (Eigen::Index i = 0; i < v.rows(); ++i) pts.emplace_back(v(i, 0), v(i, 1));
  return Polygon(std::move(pts));
}

Eigen::MatrixX2d ToArray(const std::vector<Point>& pts) {
  Eigen::MatrixX2d out(static_cast<Eigen::Index>(pts.size()), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

py::dict ReportDict(const VerificationReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["measured"] = r.measured;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["negative_control"] = r.negative_control;
  d["skipped"] = r.skipped;
  d["context"] = r.context;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poncelet families, centers of mass and their loci";

  static py::exception<Error> error(m, "PonceletError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(ErrorName(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<EllipseParams>(m, "EllipseParams")
      .def_readonly("center", &EllipseParams::center)
      .def_readonly("major", &EllipseParams::major)
      .def_readonly("minor", &EllipseParams::minor)
      .def_readonly("tilt", &EllipseParams::tilt)
      .def("__repr__", [](const EllipseParams& e) {
        return "EllipseParams(center=(" + std::to_string(e.center.x()) + ", " +
               std::to_string(e.center.y()) + "), major=" + std::to_string(e.major) +
               ", minor=" + std::to_string(e.minor) + ", tilt=" + std::to_string(e.tilt) + ")";
      });

  py::class_<Conic>(m, "Conic")
      .def_static("from_matrix", &Conic::FromMatrix, py::arg("matrix"))
      .def_static("ellipse", &ConicFromEllipse, py::arg("center"), py::arg("a"), py::arg("b"),
                  py::arg("tilt") = 0.0)
      .def_static("circle", &Circle, py::arg("center"), py::arg("radius"))
      .def_property_readonly("matrix", &Conic::matrix)
      .def_property_readonly("dual", &Conic::dual)
      .def_property_readonly("is_ellipse", &Conic::is_ellipse)
      .def_property_readonly("params", &Conic::params)
      .def("is_circle", &Conic::IsCircle, py::arg("rel_tol") = 1e-9)
      .def("evaluate", [](const Conic& c, const Point& p) { return Evaluate(c, p); });

  m.def("dual_conic", &DualConicWrt, py::arg("outer"), py::arg("gamma"));
  m.def("matrix_distance", &MatrixDistance);

  py::enum_<FreeParameter>(m, "FreeParameter")
      .value("RADIUS", FreeParameter::kRadius)
      .value("OFFSET", FreeParameter::kCenterOffset);

  py::class_<InnerTemplate>(m, "InnerTemplate")
      .def(py::init([](const Point& base_center, double radius, double axis_ratio, double tilt,
                       const Point& direction, FreeParameter free) {
             InnerTemplate t;
             t.base_center = base_center;
             t.radius = radius;
             t.axis_ratio = axis_ratio;
             t.tilt = tilt;
             t.direction = direction;
             t.free = free;
             return t;
           }),
           py::arg("base_center") = Point(0.0, 0.0), py::arg("radius") = 0.5,
           py::arg("axis_ratio") = 1.0, py::arg("tilt") = 0.0,
           py::arg("direction") = Point(1.0, 0.0), py::arg("free") = FreeParameter::kRadius)
      .def("instantiate", &InnerTemplate::Instantiate);

  py::class_<PonceletFamily>(m, "PonceletFamily")
      .def_readonly("outer", &PonceletFamily::outer)
      .def_readonly("inner", &PonceletFamily::inner)
      .def_readonly("n", &PonceletFamily::n)
      .def_readonly("k", &PonceletFamily::k)
      .def_readonly("rho", &PonceletFamily::rho)
      .def_readonly("closure_defect", &PonceletFamily::closure_defect)
      .def_readonly("inner_normalized", &PonceletFamily::inner_normalized)
      .def_readonly("free_parameter", &PonceletFamily::free_parameter)
      .def_readonly("free_value", &PonceletFamily::free_value)
      .def(
          "polygon",
          [](const PonceletFamily& f, double t, bool world) {
            return ToArray(OrbitPolygon(f, t, world ? Frame::kWorld : Frame::kNormalized).vertices());
          },
          py::arg("t"), py::arg("world") = false)
      .def("closure_defect_at", &ClosureDefect, py::arg("t"));

  m.def("find_periodic_family", &FindPeriodicFamily, py::arg("outer"), py::arg("inner"),
        py::arg("n"), py::arg("k") = 1);
  m.def("certify_family", &CertifyFamily, py::arg("outer"), py::arg("inner"), py::arg("n"),
        py::arg("k") = 1, py::arg("closure_tol") = 1e-8);
  m.def("rotation_number", &RotationNumber, py::arg("outer"), py::arg("inner"),
        py::arg("iterations") = 1000);

  m.def(
      "center_of_mass",
      [](const Eigen::MatrixX2d& vertices, const std::string& kind) {
        return CenterOfMass(ToPolygon(vertices), ParseCenterKind(kind));
      },
      py::arg("vertices"), py::arg("kind"));

  m.def(
      "sample_locus",
      [](const PonceletFamily& f, const std::string& kind, int m, bool contact) {
        const std::vector<LocusSample> s = SampleLocus(f, ParseCenterKind(kind), m, contact);
        Eigen::MatrixXd out(static_cast<Eigen::Index>(s.size()), 5);
        for (std::size_t i = 0; i < s.size(); ++i) {
          out.row(static_cast<Eigen::Index>(i)) << s[i].t, s[i].point.x(), s[i].point.y(),
              s[i].point_world.x(), s[i].point_world.y();
        }
        return out;
      },
      py::arg("family"), py::arg("kind"), py::arg("samples") = 256, py::arg("contact") = false,
      "Rows of (t, x, y, x_world, y_world).");

  py::class_<CircleFit>(m, "CircleFit")
      .def_readonly("center", &CircleFit::center)
      .def_readonly("radius", &CircleFit::radius)
      .def_readonly("rms_residual", &CircleFit::rms_residual)
      .def_readonly("max_residual", &CircleFit::max_residual)
      .def_readonly("refined", &CircleFit::refined);

  m.def(
      "fit_circle",
      [](const Eigen::MatrixX2d& points) {
        std::vector<Point> pts;
        for (Eigen::Index i = 0; i < points.rows(); ++i) pts.emplace_back(points(i, 0), points(i, 1));
        return FitCircle(pts);
      },
      py::arg("points"));

  m.def(
      "verify_porism",
      [](const PonceletFamily& f, int starts, double tol, std::uint64_t seed) {
        return ReportDict(VerifyPorism(f, starts, tol, seed));
      },
      py::arg("family"), py::arg("starts") = 32, py::arg("tol") = 1e-8, py::arg("seed") = 0);
  m.def(
      "verify_main",
      [](const PonceletFamily& f, const std::string& kind, int m, double tol) {
        return ReportDict(VerifyTheoremMain(f, ParseCenterKind(kind), m, tol).report);
      },
      py::arg("family"), py::arg("kind"), py::arg("samples") = 256, py::arg("tol") = 1e-6);
  m.def(
      "verify_weill",
      [](const PonceletFamily& f, int m, double tol) { return ReportDict(VerifyWeill(f, m, tol)); },
      py::arg("family"), py::arg("samples") = 256, py::arg("tol") = 1e-8);
  m.def(
      "verify_dual",
      [](const PonceletFamily& f, int m, double tol, double fit_tol) {
        const DualPonceletResult d = VerifyDualPoncelet(f, m, tol, fit_tol);
        return py::make_tuple(ReportDict(d.tangency), ReportDict(d.locus_cm0),
                              ReportDict(d.locus_cm2));
      },
      py::arg("family"), py::arg("samples") = 64, py::arg("tol") = 1e-8, py::arg("fit_tol") = 1e-6);
  m.def(
      "verify_measure",
      [](const PonceletFamily& f, int steps, double tol) {
        return ReportDict(VerifyMeasure(f, steps, tol));
      },
      py::arg("family"), py::arg("steps") = 100, py::arg("tol") = 1e-6);
}
