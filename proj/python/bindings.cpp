#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satake/verify.hpp"

namespace py = pybind11;
using namespace satake;

namespace {

std::string qstr(const QLaurent& c) { return c.str(); }

py::dict hecke_to_dict(const HeckeElem& t) {
  py::dict d;
  for (auto& [w, c] : t) d[py::tuple(py::cast(w))] = c.str();
  return d;
}

py::dict lattice_to_dict(const LatticeElem& x) {
  py::dict d;
  for (auto& [w, c] : x.terms) d[py::tuple(py::cast(w))] = c.str();
  return d;
}

} // namespace

PYBIND11_MODULE(_satake, m) {
  m.doc() = "spherical Hecke algebra calculator (exact arithmetic core)";

  py::register_exception<satake_error>(m, "SatakeError");

  py::class_<BasedRootDatum>(m, "BasedRootDatum")
      .def_readonly("name", &BasedRootDatum::name)
      .def_readonly("rank", &BasedRootDatum::rank)
      .def_readonly("simple_roots", &BasedRootDatum::simple_roots)
      .def_readonly("simple_coroots", &BasedRootDatum::simple_coroots)
      .def_readonly("sigma_order", &BasedRootDatum::sigma_order)
      .def("is_dominant", &BasedRootDatum::is_dominant)
      .def("is_antidominant", &BasedRootDatum::is_antidominant)
      .def("is_sigma_fixed", &BasedRootDatum::is_sigma_fixed)
      .def("__repr__",
           [](const BasedRootDatum& d) { return "<BasedRootDatum " + d.name + ">"; });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", &catalog, py::arg("name"));
  m.def("datum_from_json", &datum_from_json_text, py::arg("text"));
  m.def("datum_to_json", &datum_to_json_text, py::arg("datum"));

  m.def(
      "m_element",
      [](const BasedRootDatum& d, const Weight& lam) {
        return lattice_to_dict(m_element(d, rho_ad(d), lam));
      },
      py::arg("datum"), py::arg("lam"),
      "basis element as {weight: coefficient-string} at the spherical shift");

  m.def(
      "structure_constants",
      [](const BasedRootDatum& d, const Weight& lam, const Weight& mu) {
        return hecke_to_dict(structure_constants(HeckeHandle::spherical(d), lam, mu));
      },
      py::arg("datum"), py::arg("lam"), py::arg("mu"));

  m.def(
      "double_coset_basis",
      [](const BasedRootDatum& d, const Weight& mu) {
        return hecke_to_dict(double_coset_basis(HeckeHandle::spherical(d), mu));
      },
      py::arg("datum"), py::arg("mu"));

  m.def(
      "kostka_foulkes",
      [](const BasedRootDatum& d, const Weight& mu, const Weight& lam) {
        return kostka_foulkes(d, mu, lam).str();
      },
      py::arg("datum"), py::arg("mu"), py::arg("lam"));

  m.def("satake_count",
        [](int n, i64 q, const Weight& mu, const Weight& lam) {
          return satake_count(n, q, mu, lam);
        },
        py::arg("n"), py::arg("q"), py::arg("mu"), py::arg("lam"));

  m.def(
      "satake_vector",
      [](int n, i64 q, const Weight& mu) { return lattice_to_dict(satake_vector(n, q, mu)); },
      py::arg("n"), py::arg("q"), py::arg("mu"));

  m.def(
      "convolve_table",
      [](i64 q, const Weight& mu, const Weight& nu) { return convolve_table(q, mu, nu); },
      py::arg("q"), py::arg("mu"), py::arg("nu"));

  m.def(
      "run_acceptance",
      [](std::optional<std::string> datum) {
        AcceptanceOptions opts;
        opts.datum = std::move(datum);
        py::list out;
        for (auto& r : run_acceptance(opts)) {
          py::dict e;
          e["index"] = r.index;
          e["name"] = r.name;
          e["pass"] = r.pass;
          e["detail"] = r.detail;
          out.append(e);
        }
        return out;
      },
      py::arg("datum") = py::none());
}
