#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "perioknot/algebra.hpp"
#include "perioknot/gauss.hpp"
#include "perioknot/homs.hpp"
#include "perioknot/json_io.hpp"
#include "perioknot/periodic.hpp"
#include "perioknot/periods.hpp"
#include "perioknot/wirtinger.hpp"

namespace py = pybind11;
using namespace perioknot;

namespace {

PeriodicGaussCode periodic_or_raise(const GaussCode& code, int p) {
  auto pcode = make_periodic(code, p);
  if (!pcode) throw py::value_error("not " + std::to_string(p) + "-periodic");
  return *pcode;
}

Presentation presentation_for(const GaussCode& code, int p) {
  return p == 0 ? presentation(code).presentation : periodic_presentation(periodic_or_raise(code, p));
}

}  // namespace

PYBIND11_MODULE(_perioknot, m) {
  m.doc() = "Gauss codes of periodic virtual knots and finite-quotient checks";

  py::register_exception<GaussError>(m, "GaussError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<TorusParameterError>(m, "TorusParameterError", PyExc_ValueError);
  py::register_exception<NotKnotLikeError>(m, "NotKnotLikeError", PyExc_ValueError);

  py::class_<GaussCode>(m, "GaussCode")
      .def(py::init([](const std::string& text) { return parse_gauss(text); }), py::arg("text"))
      .def_property_readonly("crossing_count", &GaussCode::crossing_count)
      .def_property_readonly("basepoint", &GaussCode::basepoint)
      .def("writhe", [](const GaussCode& c) { return writhe(c); })
      .def("render", [](const GaussCode& c) { return render(c); })
      .def("rotated", &GaussCode::rotated, py::arg("offset"))
      .def("equivalent", [](const GaussCode& a, const GaussCode& b) { return equivalent_up_to_relabeling(a, b); })
      .def("__len__", &GaussCode::size)
      .def("__eq__", [](const GaussCode& a, const GaussCode& b) { return a == b; })
      .def("__repr__", [](const GaussCode& c) { return "GaussCode('" + render(c) + "')"; });
  py::implicitly_convertible<std::string, GaussCode>();

  m.def("is_periodic", [](const GaussCode& code, int p) { return detect_periodicity(code, p).has_value(); },
        py::arg("code"), py::arg("p"));

  m.def(
      "detect_periodicity",
      [](const GaussCode& code, int p) -> py::object {
        auto ps = detect_periodicity(code, p);
        if (!ps) return py::none();
        py::dict out;
        out["p"] = ps->p;
        out["n"] = ps->n;
        out["shift"] = ps->shift;
        out["sigma"] = ps->sigma;
        return out;
      },
      py::arg("code"), py::arg("p"));

  m.def(
      "quotient_json",
      [](const GaussCode& code, int p) { return to_json(quotient(periodic_or_raise(code, p))).dump(); },
      py::arg("code"), py::arg("p"));

  m.def(
      "symmetrize",
      [](const std::string& voltage_json) {
        return symmetrize(voltage_code_from_json(Json::parse(voltage_json))).code();
      },
      py::arg("voltage_json"));

  m.def(
      "presentation_json",
      [](const GaussCode& code, int p) {
        if (p == 0) {
          auto w = presentation(code);
          Json out = to_json(w.presentation);
          out["peripheral"] = to_json(w.peripheral, w.presentation);
          return out.dump();
        }
        const PeriodicGaussCode pcode = periodic_or_raise(code, p);
        const Presentation pres = periodic_presentation(pcode);
        Json out = to_json(pres);
        out["peripheral"] = to_json(peripheral_pair(pcode, pres), pres);
        return out.dump();
      },
      py::arg("code"), py::arg("p") = 0);

  m.def(
      "alexander",
      [](const GaussCode& code) {
        const LaurentPoly poly = alexander_polynomial(presentation(code).presentation);
        return py::make_tuple(poly.low_exponent(), poly.coefficients());
      },
      py::arg("code"));

  m.def(
      "count_homs",
      [](const GaussCode& code, int degree, int p, int workers) {
        OracleOptions options;
        options.workers = workers;
        const Presentation pres = presentation_for(code, p);
        py::gil_scoped_release release;
        return enumerate_hom_list(pres, degree, options).size();
      },
      py::arg("code"), py::arg("degree"), py::arg("p") = 0, py::arg("workers") = 1);

  m.def("torus_periods", &torus_periods, py::arg("r"), py::arg("s"));

  m.def(
      "certify_json",
      [](const GaussCode& code, int p, int dmax, std::uint64_t budget) {
        const PeriodicGaussCode pcode = periodic_or_raise(code, p);
        CertifyOptions options;
        options.dmax = dmax;
        options.node_budget = budget;
        CertificationReport report;
        {
          py::gil_scoped_release release;
          report = certify(pcode, options);
        }
        return to_json(report, periodic_presentation(pcode)).dump();
      },
      py::arg("code"), py::arg("p"), py::arg("dmax") = 5, py::arg("budget") = 10'000'000);
}
