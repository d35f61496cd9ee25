// Python bindings for the core operations: group arithmetic, metric
// quantities, the field catalog, the curve solver with its validators, and
// the measure checks. Thin value-copy layer; no shared state crosses the
// boundary.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heis/field.hpp"
#include "heis/hgroup.hpp"
#include "heis/lsde.hpp"
#include "heis/measure.hpp"

namespace py = pybind11;
using namespace heis;

namespace {

py::dict residuals_dict(const Residuals& r) {
    py::dict d;
    d["residual_h"] = r.residual_h;
    d["error_norm"] = r.error_norm;
    d["levelset_drift"] = r.levelset_drift;
    return d;
}

py::dict certificate_dict(const RadiiCertificate& c) {
    py::dict d;
    d["delta0"] = c.delta0;
    d["eps0"] = c.eps0;
    d["rho0"] = c.rho0;
    d["kappa"] = c.kappa;
    d["c_equiv"] = c.c_equiv;
    d["valid"] = c.valid();
    py::list conds;
    for (const auto& cond : c.conditions) {
        py::dict cd;
        cd["name"] = cond.name;
        cd["lhs"] = cond.lhs;
        cd["rhs"] = cond.rhs;
        cd["satisfied"] = cond.satisfied;
        conds.append(cd);
    }
    d["conditions"] = conds;
    return d;
}

}  // namespace

PYBIND11_MODULE(heispy, m) {
    m.doc() = "Level-set curve solver on the first Heisenberg group";

    py::class_<HPoint>(m, "HPoint")
        .def(py::init<>())
        .def(py::init<double, double, double>())
        .def_readwrite("x1", &HPoint::x1)
        .def_readwrite("x2", &HPoint::x2)
        .def_readwrite("x3", &HPoint::x3)
        .def("__repr__", [](const HPoint& p) {
            return "HPoint(" + std::to_string(p.x1) + ", " + std::to_string(p.x2) +
                   ", " + std::to_string(p.x3) + ")";
        });

    py::class_<MetricConfig>(m, "MetricConfig")
        .def(py::init<>())
        .def_property_readonly("name",
                               [](const MetricConfig&) { return "koranyi"; })
        .def_readwrite("lam", &MetricConfig::lambda);

    m.def("mul", &mul);
    m.def("inv", &inv);
    m.def("dilate", &dilate);
    m.def("gauge_h", &gauge_h);
    m.def("gauge_v", &gauge_v);
    m.def("hnorm", &hnorm);
    m.def("dist", &dist);
    m.def("equivalence_constant", &equivalence_constant, py::arg("metric"),
          py::arg("samples"), py::arg("seed") = 0x9e3779b97f4a7c15ULL);
    m.def("beta_d", &beta_d, py::arg("metric"), py::arg("resolution"));

    py::class_<Mat2>(m, "Mat2")
        .def(py::init<>())
        .def(py::init([](double a, double b, double c, double d) {
            return Mat2{a, b, c, d};
        }))
        .def_readwrite("a", &Mat2::a)
        .def_readwrite("b", &Mat2::b)
        .def_readwrite("c", &Mat2::c)
        .def_readwrite("d", &Mat2::d)
        .def("det", &Mat2::det)
        .def("op_norm", &Mat2::op_norm);

    py::class_<FieldModel>(m, "FieldModel")
        .def_readwrite("alpha", &FieldModel::alpha)
        .def_readwrite("name", &FieldModel::name)
        .def("__call__", [](const FieldModel& F, const HPoint& x) {
            const Vec2 v = F.eval(x);
            return py::make_tuple(v[0], v[1]);
        });

    m.def("projection_field", &projection_field, py::arg("alpha") = 0.5);
    m.def("shear_field", &shear_field, py::arg("alpha") = 0.5);
    m.def("shear_field_coeff", &shear_field_coeff, py::arg("coeff"),
          py::arg("alpha") = 0.5);
    m.def("linear_field", &linear_field, py::arg("matrix"), py::arg("alpha") = 0.5);
    m.def("blowup", &blowup, py::arg("field"), py::arg("p"), py::arg("r"));

    m.def("grad_h", [](const FieldModel& F, const HPoint& x) {
        const Mat2 g = grad_h(F, x);
        return py::make_tuple(py::make_tuple(g.a, g.b), py::make_tuple(g.c, g.d));
    });
    m.def("taylor_remainder", [](const FieldModel& F, const HPoint& x, const HPoint& y) {
        const Vec2 r = taylor_remainder(F, x, y);
        return py::make_tuple(r[0], r[1]);
    });

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("delta", &SolverConfig::delta)
        .def_readwrite("grid_levels", &SolverConfig::grid_levels)
        .def_readwrite("tol", &SolverConfig::tol)
        .def_readwrite("max_iter", &SolverConfig::max_iter)
        .def_readwrite("damping", &SolverConfig::damping)
        .def_readwrite("halving_retries", &SolverConfig::halving_retries);

    py::class_<Trace>(m, "Trace")
        .def_readonly("times", &Trace::times)
        .def_readonly("path", &Trace::path)
        .def_readonly("base_point", &Trace::base_point)
        .def_readonly("start", &Trace::start)
        .def_readonly("error_norm", &Trace::error_norm)
        .def_readonly("holder_h", &Trace::holder_h)
        .def_readonly("residual_h", &Trace::residual_h)
        .def_readonly("levelset_drift", &Trace::levelset_drift)
        .def_readonly("iterations", &Trace::iterations)
        .def_readonly("converged", &Trace::converged)
        .def_readonly("delta_used", &Trace::delta_used)
        .def_readonly("alpha", &Trace::alpha);

    py::register_exception<DegeneratePoint>(m, "DegeneratePoint");
    py::register_exception<NonConvergence>(m, "NonConvergence");
    py::register_exception<NoAdmissibleRadii>(m, "NoAdmissibleRadii");

    m.def("solve", &solve, py::arg("field"), py::arg("p"), py::arg("q"),
          py::arg("config"));
    m.def("residuals", [](const FieldModel& F, const Trace& tr) {
        return residuals_dict(residuals(F, tr));
    });
    m.def("admissible_radii",
          [](const FieldModel& F, const HPoint& p, const MetricConfig& metric) {
              return certificate_dict(admissible_radii(F, p, metric));
          });
    m.def("project_point",
          [](const Trace& tr, const HPoint& x) {
              const ProjectionResult r = project_point(tr, x);
              return py::make_tuple(r.t, r.found);
          });

    m.def("area_measure",
          [](const Trace& tr, const HPoint& lo, const HPoint& hi) {
              return area_measure(tr, Box{lo, hi});
          });
    m.def("coarea_check",
          [](const FieldModel& F, const HPoint& lo, const HPoint& hi,
             const SolverConfig& cfg, const MetricConfig& metric,
             std::uint64_t z_samples, int quadrature) {
              CoareaOptions opt;
              opt.z_samples = z_samples;
              opt.quadrature = quadrature;
              const MeasureReport rep = coarea_check(F, Box{lo, hi}, cfg, metric, opt);
              py::dict d;
              d["lhs"] = rep.lhs;
              d["rhs"] = rep.rhs;
              d["rel_error"] = rep.rel_error;
              d["std_error"] = rep.std_error;
              d["samples"] = rep.samples;
              d["skipped"] = rep.skipped;
              return d;
          },
          py::arg("field"), py::arg("lo"), py::arg("hi"), py::arg("config"),
          py::arg("metric"), py::arg("z_samples") = 100, py::arg("quadrature") = 16);
}
