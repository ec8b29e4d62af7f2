#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "gjs/errors.hpp"
#include "gjs/io.hpp"

namespace py = pybind11;
using namespace gjs;

namespace {

py::array_t<double> to_numpy(const OperatorMatrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  return out;
}

Orientation parse_orientation(const std::string& name) {
  if (name == "oscillator") return Orientation::OscillatorLike;
  if (name == "weight") return Orientation::WeightLike;
  throw Error(ErrorCode::InvalidArgument, "orientation must be 'oscillator' or 'weight'");
}

py::dict report_dict(const ResidualReport& r) {
  py::dict residuals;
  for (const Residual& res : r.residuals) residuals[py::str(res.relation)] = res.max_abs;
  py::dict d;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed();
  d["max_residual"] = r.max_residual();
  d["residuals"] = residuals;
  return d;
}

py::dict fixed_point_dict(const FixedPointInfo& fp) {
  py::dict d;
  d["location"] = fp.location;
  d["multiplier"] = fp.multiplier;
  d["stability"] = std::string(to_string(fp.stability));
  d["one_sided"] = fp.one_sided ? py::object(py::str(std::string(to_string(*fp.one_sided)))) : py::none();
  d["in_invertible_region"] = fp.in_invertible_region;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gjs, m) {
  m.doc() = "Generalized Heisenberg algebra, generalized sl(2) and two-oscillator realizations";

  static py::exception<Error> error(m, "GjsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CharFn>(m, "CharFn")
      .def(py::init([](std::vector<double> coefficients, const std::string& orientation) {
             return CharFn(std::move(coefficients), parse_orientation(orientation));
           }),
           py::arg("coefficients"), py::arg("orientation"))
      .def_property_readonly("coefficients",
                             [](const CharFn& f) {
                               return std::vector<double>(f.coefficients().begin(), f.coefficients().end());
                             })
      .def_property_readonly("orientation", [](const CharFn& f) { return std::string(to_string(f.orientation())); })
      .def_property_readonly("degree", &CharFn::degree)
      .def("__call__", &CharFn::operator())
      .def("derivative", [](const CharFn& f, double x) { return derivative(f, x); })
      .def("iterate", [](const CharFn& f, double x0, std::size_t steps,
                         double bound) { return iterate(f, x0, steps, bound); },
           py::arg("x0"), py::arg("steps"), py::arg("divergence_bound") = kDefaultDivergenceBound)
      .def("fixed_points", [](const CharFn& f) {
        py::list out;
        for (const FixedPointInfo& fp : fixed_points(f)) out.append(fixed_point_dict(fp));
        return out;
      })
      .def("discriminant", [](const CharFn& f) { return discriminant(f); })
      .def("invertibility_boundary", [](const CharFn& f) { return invertibility_boundary(f); })
      .def("in_invertible_region", [](const CharFn& f, double x) { return in_invertible_region(f, x); })
      .def("reflection_pair", [](const CharFn& f) { return reflection_pair(f); })
      .def("to_json", [](const CharFn& f) { return to_json(f).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const CharFn& f) { return "CharFn(" + to_json(f).dump() + ")"; });

  py::class_<GhaRep>(m, "GhaRep")
      .def_property_readonly("alpha0", &GhaRep::alpha0)
      .def_property_readonly("dim", &GhaRep::dim)
      .def_property_readonly("eigenvalues", [](const GhaRep& r) {
        return std::vector<double>(r.eigenvalues().begin(), r.eigenvalues().end());
      })
      .def_property_readonly("ladder", [](const GhaRep& r) {
        return std::vector<double>(r.ladder().begin(), r.ladder().end());
      })
      .def("H", [](const GhaRep& r) { return to_numpy(matrix_H(r)); })
      .def("A", [](const GhaRep& r) { return to_numpy(matrix_A(r)); })
      .def("Adag", [](const GhaRep& r) { return to_numpy(matrix_Adag(r)); })
      .def("casimir", [](const GhaRep& r) { return to_numpy(casimir_gha(r)); })
      .def("verify", [](const GhaRep& r, double tol) { return report_dict(verify_gha_relations(r, tol)); },
           py::arg("tol") = 1e-10)
      .def("with_ladder_offset", &GhaRep::with_ladder_offset);

  m.def("build_gha", &build_gha, py::arg("fn"), py::arg("alpha0"), py::arg("dim"));
  m.def("gauss_numbers", &gauss_numbers, py::arg("fn"), py::arg("alpha0"), py::arg("count"));

  py::class_<Gsl2Rep>(m, "Gsl2Rep")
      .def_property_readonly("alpha_j", &Gsl2Rep::alpha_j)
      .def_property_readonly("dim", &Gsl2Rep::dim)
      .def_property_readonly("kind", [](const Gsl2Rep& r) { return std::string(to_string(r.kind())); })
      .def_property_readonly("weights", [](const Gsl2Rep& r) {
        return std::vector<double>(r.weights().begin(), r.weights().end());
      })
      .def_property_readonly("ladder_sq", [](const Gsl2Rep& r) {
        return std::vector<double>(r.ladder_sq().begin(), r.ladder_sq().end());
      })
      .def_property_readonly("closure_residual", &Gsl2Rep::closure_residual)
      .def("J0", [](const Gsl2Rep& r) { return to_numpy(matrix_J0(r)); })
      .def("Jplus", [](const Gsl2Rep& r) { return to_numpy(matrix_Jplus(r)); })
      .def("Jminus", [](const Gsl2Rep& r) { return to_numpy(matrix_Jminus(r)); })
      .def("casimir", [](const Gsl2Rep& r) { return to_numpy(casimir_gsl2(r)); })
      .def("verify", [](const Gsl2Rep& r, double tol) { return report_dict(verify_gsl2_relations(r, tol)); },
           py::arg("tol") = 1e-10);

  m.def(
      "build_gsl2",
      [](const CharFn& gn, double alpha_j, std::size_t dim, const std::string& kind, double closure_tol) {
        const auto k = parse_gsl2_kind(kind);
        if (!k) throw Error(ErrorCode::InvalidArgument, "kind must be periodic, cut or truncated");
        return build_gsl2(gn, alpha_j, dim, *k, closure_tol);
      },
      py::arg("gn"), py::arg("alpha_j"), py::arg("dim"), py::arg("kind"), py::arg("closure_tol") = kClosureTolerance);

  m.def(
      "cut_condition_solve",
      [](const CharFn& gn, std::size_t d) {
        const CutSolutions cut = cut_condition_solve(gn, d);
        py::list excluded;
        for (const ExcludedRoot& e : cut.excluded) excluded.append(py::make_tuple(e.value, std::string(to_string(e.reason))));
        py::dict out;
        out["included"] = cut.included;
        out["excluded"] = excluded;
        return out;
      },
      py::arg("gn"), py::arg("d"));
  m.def("periodic_condition_solve", [](const CharFn& gn, std::size_t d) { return periodic_condition_solve(gn, d); },
        py::arg("gn"), py::arg("d"));

  py::class_<JsMapRep>(m, "JsMapRep")
      .def_property_readonly("Q2", &JsMapRep::Q2)
      .def_property_readonly("M0sq", &JsMapRep::M0sq)
      .def_property_readonly("alpha_j", &JsMapRep::alpha_j)
      .def_property_readonly("basis", [](const JsMapRep& r) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const OccupationPair& p : r.space().basis()) out.emplace_back(p.n1, p.n2);
        return out;
      })
      .def("S_z", [](const JsMapRep& r) { return to_numpy(r.S_z()); })
      .def("S_plus", [](const JsMapRep& r) { return to_numpy(r.S_plus()); })
      .def("S_minus", [](const JsMapRep& r) { return to_numpy(r.S_minus()); })
      .def("S_sq", [](const JsMapRep& r) { return to_numpy(r.S_sq()); })
      .def("F", [](const JsMapRep& r) { return to_numpy(r.F()); })
      .def("verify_against", [](const JsMapRep& r, const Gsl2Rep& rep,
                                double tol) { return report_dict(verify_map_equals_gsl2(r, rep, tol)); },
           py::arg("rep"), py::arg("tol") = 1e-10);

  m.def("build_jsmap", &build_jsmap_fixed_j, py::arg("fn"), py::arg("alpha0"), py::arg("gn"), py::arg("alpha_j"),
        py::arg("twice_j"));
  m.def(
      "build_jsmap_full_grid",
      [](const CharFn& fn, double alpha0, const CharFn& gn, double alpha_j, std::size_t grid_dim,
         std::optional<std::size_t> designated) {
        return build_jsmap(TwoOscillatorSpace::full_grid(fn, alpha0, grid_dim), gn, alpha_j, designated);
      },
      py::arg("fn"), py::arg("alpha0"), py::arg("gn"), py::arg("alpha_j"), py::arg("grid_dim"),
      py::arg("designated_twice_j") = py::none());
  m.def(
      "verify_pairing_identity",
      [](const CharFn& fn, double alpha0, const CharFn& gn, double alpha_j, std::size_t m_max, double tol) {
        return report_dict(verify_pairing_identity(fn, alpha0, gn, alpha_j, m_max, tol));
      },
      py::arg("fn"), py::arg("alpha0"), py::arg("gn"), py::arg("alpha_j"), py::arg("m_max"), py::arg("tol") = 1e-10);

  m.def(
      "figure",
      [](const std::string& name) {
        const auto fig = parse_figure(name);
        if (!fig) throw Error(ErrorCode::InvalidArgument, "figure must be fig1, fig2, fig3 or fig4");
        py::list out;
        for (const OrbitReport& r : figure_bundle(*fig)) {
          py::dict d;
          d["series"] = r.series;
          d["start"] = r.start;
          d["iterates"] = r.iterates;
          d["diverged"] = r.diverged;
          d["window"] = py::make_tuple(r.window.lo, r.window.hi);
          out.append(d);
        }
        return out;
      },
      py::arg("name"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a gjs command line; returns (exit_code, stdout, stderr).");
}
