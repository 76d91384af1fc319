#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtcalc/verify.hpp"

namespace py = pybind11;
using namespace rtcalc;

namespace {

ModuleLabel label_from(const py::object& color) {
  if (py::isinstance<py::tuple>(color)) {
    auto t = color.cast<std::pair<int, int>>();
    return ModuleLabel::simple(t.first, t.second);
  }
  return ModuleLabel::verma(color.cast<cplx>());
}

std::vector<ModuleLabel> labels_from(const py::object& colors) {
  std::vector<ModuleLabel> out;
  if (py::isinstance<py::list>(colors))
    for (auto c : colors.cast<py::list>()) out.push_back(label_from(py::reinterpret_borrow<py::object>(c)));
  else
    out.push_back(label_from(colors));
  return out;
}

py::dict result_dict(const InvariantResult& res) {
  py::dict d;
  d["value"] = res.value;
  d["eta"] = res.eta;
  d["cut"] = res.cut_id;
  d["component"] = res.cut_component;
  d["residual"] = res.scalar_residual;
  d["r"] = res.r;
  d["hash"] = res.diagram_hash;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Renormalized link invariants over the unrolled quantum group of sl2 at q = exp(i pi / r)";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("qpow", [](int r, cplx z) { return qpow(GlobalParams(r), z); }, py::arg("r"), py::arg("z"));
  m.def("qbracket", [](int r, cplx z) { return qbracket(GlobalParams(r), z); }, py::arg("r"), py::arg("z"));
  m.def("qint", [](int r, cplx z) { return qint(GlobalParams(r), z); }, py::arg("r"), py::arg("z"));

  m.def("qdim", [](int r, const py::object& color) { return qdim(GlobalParams(r), label_from(color)); },
        py::arg("r"), py::arg("color"),
        "Quantum dimension of a Verma color (complex) or a simple module given as (n, l).");
  m.def("twist_scalar",
        [](int r, const py::object& color) { return twist_scalar(GlobalParams(r), label_from(color)); },
        py::arg("r"), py::arg("color"));
  m.def("s_prime", [](int r, cplx beta, cplx alpha) { return s_prime(GlobalParams(r), beta, alpha); },
        py::arg("r"), py::arg("beta"), py::arg("alpha"));
  m.def("s_prime_engine", [](int r, cplx beta, cplx alpha) { return s_prime_engine(GlobalParams(r), beta, alpha); },
        py::arg("r"), py::arg("beta"), py::arg("alpha"));
  m.def("mod_qdim", [](int r, cplx eta, cplx alpha) { return mod_qdim(GlobalParams(r), eta, alpha); },
        py::arg("r"), py::arg("eta"), py::arg("alpha"));
  m.def("eta_ratio", [](int r, cplx eta, cplx eta2) { return eta_ratio(GlobalParams(r), eta, eta2); },
        py::arg("r"), py::arg("eta"), py::arg("eta_prime"));

  m.def("catalog_names", &catalog_names);
  m.def(
      "evaluate",
      [](const std::string& name, int r, const py::object& colors, cplx eta, std::optional<int> cut, double tol) {
        Tolerances t;
        t.scalar = tol;
        return result_dict(renormalized(catalog_braid(name, GlobalParams(r), labels_from(colors)), eta, cut, t));
      },
      py::arg("name"), py::arg("r"), py::arg("colors"), py::arg("eta") = cplx(0.37), py::arg("cut") = py::none(),
      py::arg("tol") = Tolerances{}.scalar,
      "F'_eta of a catalog link. colors is one color or a list, one per component.");
  m.def(
      "evaluate_json",
      [](const std::string& text, cplx eta, std::optional<int> cut) {
        auto in = parse_input(text);
        return result_dict(renormalized(in.diagram, eta, cut ? cut : in.cut));
      },
      py::arg("text"), py::arg("eta") = cplx(0.37), py::arg("cut") = py::none());
  m.def(
      "serialize_catalog",
      [](const std::string& name, int r, const py::object& colors, std::optional<int> keep_open) {
        return serialize(close_braid(catalog_braid(name, GlobalParams(r), labels_from(colors)), keep_open));
      },
      py::arg("name"), py::arg("r"), py::arg("colors"), py::arg("keep_open") = py::none());

  m.def(
      "decompose",
      [](int r, cplx eta) {
        auto rep = decompose_check(GlobalParams(r), eta);
        return py::make_tuple(rep.counts, rep.stray);
      },
      py::arg("r"), py::arg("eta"));

  m.def(
      "verify",
      [](int r, uint64_t seed) {
        VerifyOptions o;
        o.seed = seed;
        std::vector<SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = run_all(GlobalParams(r), o);
        }
        py::list out;
        for (const auto& s : results) {
          py::dict d;
          d["name"] = s.name;
          d["passed"] = s.passed;
          d["max_residual"] = s.max_residual;
          d["tol"] = s.tol;
          d["detail"] = s.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("r") = 2, py::arg("seed") = 7);
}
