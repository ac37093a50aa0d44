#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqiso/commands.hpp"
#include "eqiso/conference.hpp"
#include "eqiso/errors.hpp"
#include "eqiso/gf.hpp"
#include "eqiso/hadamard.hpp"
#include "eqiso/planes.hpp"
#include "eqiso/record.hpp"
#include "eqiso/seidel.hpp"

namespace py = pybind11;
using namespace eqiso;

namespace {

RecordKind kind_or_throw(const std::string& name) {
  const auto kind = parse_kind(name);
  if (!kind) throw py::value_error("unknown record kind '" + name + "'");
  return *kind;
}

RecordFormat format_or_throw(const std::string& name) {
  const auto format = parse_format(name);
  if (!format) throw py::value_error("unknown record format '" + name + "'");
  return *format;
}

py::tuple as_fraction(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

}  // namespace

PYBIND11_MODULE(_eqiso, m) {
  m.doc() = "Finite-field conference matrices, Seidel matrices and equi-isoclinic planes";

  static py::exception<Error> error(m, "EqisoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FieldCtx>(m, "FieldCtx")
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("alpha", &FieldCtx::alpha)
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("modulus", &FieldCtx::modulus)
      .def("element", [](const FieldCtx& f, std::size_t i) { return f.element(i).coeffs; })
      .def("__repr__", [](const FieldCtx& f) {
        return "FieldCtx(p=" + std::to_string(f.p()) + ", alpha=" + std::to_string(f.alpha()) + ")";
      });
  m.def("make_field", &make_field, py::arg("p"), py::arg("alpha"));
  m.def(
      "legendre_chi",
      [](const FieldCtx& f, std::vector<int> coeffs) { return legendre_chi(f, FieldElement{std::move(coeffs)}); },
      py::arg("ctx"), py::arg("coeffs"));

  py::class_<UnitComplex>(m, "UnitComplex")
      .def(py::init<double, double>(), py::arg("re"), py::arg("im"))
      .def_static("polar", &UnitComplex::polar, py::arg("angle"))
      .def_property_readonly("re", &UnitComplex::re)
      .def_property_readonly("im", &UnitComplex::im)
      .def_property_readonly("arg", &UnitComplex::arg)
      .def_property_readonly("value", &UnitComplex::value)
      .def("conj", &UnitComplex::conj);
  m.def("critical_omega", &critical_omega, py::arg("k"));

  py::class_<ConferenceMatrix>(m, "ConferenceMatrix")
      .def_readonly("q", &ConferenceMatrix::q)
      .def_readonly("k", &ConferenceMatrix::k)
      .def_readonly("omega", &ConferenceMatrix::omega)
      .def_readonly("exponents", &ConferenceMatrix::exponents)
      .def_readonly("values", &ConferenceMatrix::values);
  m.def("build_conference", &build_conference, py::arg("ctx"), py::arg("omega"));
  m.def(
      "gram_counts",
      [](const ConferenceMatrix& c) {
        const CountGrid grid = gram_counts(c);
        std::vector<std::vector<std::tuple<int, int, int>>> out(grid.q);
        for (std::size_t a = 0; a < grid.q; ++a) {
          for (std::size_t b = 0; b < grid.q; ++b) {
            const auto& cell = grid.at(a, b);
            out[a].emplace_back(cell.zero, cell.plus_two, cell.minus_two);
          }
        }
        return out;
      },
      py::arg("c"));
  m.def("verify_conference_exact", &verify_conference_exact, py::arg("c"));
  m.def("conference_residual", &conference_residual, py::arg("values"));

  py::class_<SeidelMatrix>(m, "SeidelMatrix")
      .def_property_readonly("q", &SeidelMatrix::q)
      .def_property_readonly("k", &SeidelMatrix::k)
      .def_property_readonly("theta", &SeidelMatrix::theta)
      .def_property_readonly("dense", &SeidelMatrix::dense);
  m.def("build_seidel", &build_seidel, py::arg("ctx"), py::arg("k"));
  m.def("verify_seidel_square", &verify_seidel_square, py::arg("s"));

  py::class_<EigenStructure>(m, "EigenStructure")
      .def_readonly("positive", &EigenStructure::positive)
      .def_readonly("negative", &EigenStructure::negative)
      .def_readonly("positive_trace", &EigenStructure::positive_trace)
      .def_readonly("negative_trace", &EigenStructure::negative_trace)
      .def_readonly("positive_multiplicity", &EigenStructure::positive_multiplicity)
      .def_readonly("negative_multiplicity", &EigenStructure::negative_multiplicity)
      .def_readonly("projector_residual", &EigenStructure::projector_residual);
  m.def("eigen_structure", &eigen_structure, py::arg("s"));

  py::class_<PlaneTuple>(m, "PlaneTuple")
      .def_readonly("r", &PlaneTuple::r)
      .def_readonly("n", &PlaneTuple::n)
      .def_property_readonly("lambda_", [](const PlaneTuple& pt) { return as_fraction(pt.lambda); })
      .def_readonly("basis", &PlaneTuple::basis)
      .def_readonly("gram", &PlaneTuple::gram);
  m.def(
      "isoclinic_parameter", [](int k) { return as_fraction(isoclinic_parameter(k)); }, py::arg("k"));
  m.def("build_gram", &build_gram, py::arg("s"));
  m.def(
      "extract_bases",
      [](const Eigen::MatrixXd& gram, int r, std::int64_t num, std::int64_t den) {
        return extract_bases(gram, r, Rational(num, den));
      },
      py::arg("gram"), py::arg("r"), py::arg("lambda_num"), py::arg("lambda_den"));
  m.def("verify_isoclinic", &verify_isoclinic, py::arg("planes"));

  py::class_<LsBound>(m, "LsBound").def_readonly("bound", &LsBound::bound).def_readonly("tight", &LsBound::tight);
  m.def(
      "check_ls_bound",
      [](int r, std::int64_t num, std::int64_t den, int v) { return check_ls_bound(r, Rational(num, den), v); },
      py::arg("r"), py::arg("lambda_num"), py::arg("lambda_den"), py::arg("v"));

  py::class_<HadamardMatrix>(m, "HadamardMatrix")
      .def_readonly("order", &HadamardMatrix::order)
      .def_readonly("values", &HadamardMatrix::values);
  m.def("double_conference", &double_conference, py::arg("c"));
  m.def(
      "verify_hadamard", [](const Eigen::MatrixXcd& h) { return verify_hadamard(h); }, py::arg("h"));

  m.def(
      "check_admissible",
      [](int k) {
        const Admissibility a = check_admissible(k);
        return py::make_tuple(a.admissible, a.q, a.reason);
      },
      py::arg("k"));
  m.def(
      "enumerate_orders",
      [](int k_min, int k_max, bool odd_only) {
        std::vector<std::tuple<int, std::int64_t, std::string>> rows;
        for (const auto& row : enumerate_orders(k_min, k_max, odd_only)) {
          const char* status = row.status == OrderStatus::Admissible ? "admissible"
                               : row.status == OrderStatus::Open     ? "open"
                                                                     : "excluded";
          rows.emplace_back(row.k, row.q, status);
        }
        return rows;
      },
      py::arg("k_min") = 3, py::arg("k_max") = 51, py::arg("odd_only") = false);

  m.def(
      "make_record",
      [](const std::string& kind, int k, const std::string& format) {
        return to_text(make_record(kind_or_throw(kind), k), format_or_throw(format));
      },
      py::arg("kind"), py::arg("k"), py::arg("format") = "text", "Serialized export record for an admissible k.");
  m.def(
      "record_to_text",
      [](const std::string& text, const std::string& format) {
        return to_text(parse_record(text), format_or_throw(format));
      },
      py::arg("text"), py::arg("format"), "Re-encode a serialized record.");
  m.def(
      "parse_record_text",
      [](const std::string& text) {
        const ExportRecord r = parse_record(text);
        return py::dict(py::arg("kind") = std::string(to_string(r.kind)), py::arg("order") = r.order,
                        py::arg("k") = r.k, py::arg("theta") = r.theta, py::arg("entries") = r.entries,
                        py::arg("exponents") = r.exponents);
      },
      py::arg("text"));
  m.def(
      "verify_record_text",
      [](const std::string& text, double tol, bool exact) {
        const VerifyReport report = verify_record(parse_record(text), tol, exact);
        std::vector<std::tuple<std::string, double, bool>> out;
        for (const auto& r : report.residuals) out.emplace_back(r.name, r.value, r.pass);
        return py::make_tuple(report.pass(), out);
      },
      py::arg("text"), py::arg("tol") = 1e-9, py::arg("exact") = false);
}
