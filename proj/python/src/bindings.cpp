#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "eccwheel/circulant.hpp"
#include "eccwheel/cli.hpp"
#include "eccwheel/closedform.hpp"
#include "eccwheel/errors.hpp"
#include "eccwheel/graphs.hpp"
#include "eccwheel/oracle.hpp"
#include "eccwheel/report.hpp"

namespace py = pybind11;
using namespace eccwheel;
namespace cf = eccwheel::closedform;

namespace {

// Rationals cross the boundary as fractions.Fraction, built from "p/q".
py::object to_py(const Rational& r) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_fraction_string());
}

py::list to_py(const VectorQ& v) {
  py::list out;
  for (const auto& x : v.entries()) out.append(to_py(x));
  return out;
}

py::list to_py(const MatrixQ& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row_vector(i)));
  return out;
}

py::tuple to_py(const InertiaTriple& t) { return py::make_tuple(t.n_plus, t.n_minus, t.n_zero); }

// Accepts int, Fraction or "p/q" entries.
Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

MatrixQ matrix_from_py(const py::sequence& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(from_py(x));
    out.push_back(std::move(r));
  }
  return MatrixQ::from_rows(out);
}

py::object report_dict(const report::VerificationReport& rep) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(cli::render_report(rep, cli::Format::json, false));
}

}  // namespace

PYBIND11_MODULE(_eccwheel, m) {
  m.doc() = "Exact closed forms and oracles for eccentricity matrices of wheel graphs";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<NotSymmetricError>(m, "NotSymmetricError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);

  m.def("ecc_matrix", [](int n) { return to_py(cf::ecc_matrix_wheel(n)); }, py::arg("n"));
  m.def("ecc_matrix_minus_edge", [](int n) { return to_py(cf::ecc_matrix_wheel_minus_edge(n)); }, py::arg("n"));
  m.def("distance_matrix", [](int n) { return to_py(cf::distance_matrix_wheel(n)); }, py::arg("n"));
  m.def("ecc_matrix_definitional",
        [](int n) { return to_py(graphs::eccentricity_matrix_definitional(graphs::bfs_distances(graphs::build_wheel(n)))); }, py::arg("n"));
  m.def("laplacian_tilde", [](int n) { return to_py(cf::laplacian_tilde(n)); }, py::arg("n"));
  m.def("laplacian_hat", [](int n) { return to_py(cf::laplacian_hat(n)); }, py::arg("n"));
  m.def("inverse", [](int n) { return to_py(cf::inverse_E_closed(n)); }, py::arg("n"));
  m.def("pinv", [](int n) { return to_py(cf::pinv_E_closed(n)); }, py::arg("n"));
  m.def("weight_w", [](int n) { return to_py(cf::weight_w(n)); }, py::arg("n"));
  m.def(
      "null_vectors",
      [](int n) {
        const auto [a, b] = cf::null_vectors(n);
        return py::make_tuple(to_py(a), to_py(b));
      },
      py::arg("n"));
  m.def("edm_witness", [](int n) { return to_py(cf::edm_witness(n)); }, py::arg("n"));
  m.def("edm_witness_value", [](int n) { return to_py(cf::edm_witness_value(n)); }, py::arg("n"));

  m.def("det_E", [](int n) { return to_py(cf::det_E_closed(n)); }, py::arg("n"));
  m.def("det_E_minus_edge", [](int n) { return to_py(cf::det_E_minus_edge_closed(n)); }, py::arg("n"));
  m.def("det_T", [](std::size_t order) { return to_py(cf::det_T_closed(order)); }, py::arg("order"));
  m.def("det_B", [](int n) { return to_py(cf::det_B_closed(n)); }, py::arg("n"));
  m.def("inertia_E", [](int n) { return to_py(cf::inertia_E_closed(n)); }, py::arg("n"));
  m.def("inertia_E_minus_edge", [](int n) { return to_py(cf::inertia_E_minus_edge_closed(n)); }, py::arg("n"));
  m.def("rank_E", &cf::rank_E_closed, py::arg("n"));
  m.def(
      "spectral_radius",
      [](int n) {
        const auto r = cf::spectral_radius_closed(n);
        py::dict d;
        d["integer_part"] = r.integer_part;
        d["radicand"] = r.radicand;
        d["rho"] = r.rho_float;
        d["perron_vector"] = r.perron_vector();
        return d;
      },
      py::arg("n"));

  m.def("bareiss_det", [](const py::sequence& a) { return to_py(oracle::bareiss_det(matrix_from_py(a))); },
        py::arg("matrix"));
  m.def("rank_exact", [](const py::sequence& a) { return oracle::rank_exact(matrix_from_py(a)); }, py::arg("matrix"));
  m.def("inertia_exact", [](const py::sequence& a) { return to_py(oracle::inertia_exact(matrix_from_py(a)).inertia); },
        py::arg("matrix"));
  m.def(
      "penrose_check",
      [](const py::sequence& a, const py::sequence& x) {
        return oracle::penrose_check(matrix_from_py(a), matrix_from_py(x)).all();
      },
      py::arg("a"), py::arg("x"));
  m.def("power_iteration_rho", [](const py::sequence& a) { return oracle::power_iteration_rho(matrix_from_py(a)); },
        py::arg("matrix"));

  m.def("check_names", &report::check_names);
  m.def(
      "verify",
      [](int n, double tol) {
        report::VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = report::verify(n, {tol});
        }
        return report_dict(rep);
      },
      py::arg("n"), py::arg("tol") = 1e-8);
}
