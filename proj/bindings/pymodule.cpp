#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpi/algebra_io.hpp"
#include "gpi/catalog.hpp"
#include "gpi/report.hpp"
#include "gpi/verify.hpp"

namespace py = pybind11;
using namespace gpi;

namespace {

GradedAlgebra resolve(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog_build(source).body;
  if (!source.empty() && source[0] == '{') return algebra_from_json(source);
  return load_algebra_file(source);
}

}  // namespace

PYBIND11_MODULE(_gpi, m) {
  m.doc() = "Exact polynomial-identity computations on graded algebras";

  m.def("catalog_list", [] {
    py::list out;
    for (const auto& info : catalog_list()) {
      py::dict d;
      d["id"] = info.id;
      d["signature"] = info.signature;
      d["sample"] = info.sample;
      d["sample_dim"] = info.sample_dim;
      d["description"] = info.description;
      out.append(std::move(d));
    }
    return out;
  });

  m.def(
      "catalog_emit",
      [](const std::string& spec) { return algebra_to_json(catalog_build(spec).body); },
      py::arg("spec"), "JSON document of a catalog algebra body");

  m.def(
      "validate",
      [](const std::string& algebra) {
        GradedAlgebra a = resolve(algebra);
        ValidationReport rep = validate_algebra(a);
        py::dict out;
        out["ok"] = rep.ok;
        out["message"] = rep.message;
        if (rep.ok && a.wedderburn) {
          ValidationReport w = verify_wedderburn(a);
          out["wedderburn_ok"] = w.ok;
          out["wedderburn_message"] = w.message;
        }
        return out;
      },
      py::arg("algebra"), "Validate an algebra (catalog spec, file path, or JSON text)");

  m.def(
      "codim_json",
      [](const std::string& algebra, int n, int jobs) {
        GradedAlgebra a = resolve(algebra);
        EnvelopeContext ctx(a);
        return codim_json(a.group, algebra, codim_sequence(ctx, n, jobs));
      },
      py::arg("algebra"), py::arg("n") = 4, py::arg("jobs") = 1,
      "Codimension report as a JSON string");

  m.def(
      "exponent_json",
      [](const std::string& algebra, int max_degree, const std::string& mode) {
        GradedAlgebra a = resolve(algebra);
        std::optional<int> declared;
        if (algebra.rfind("catalog:", 0) == 0) declared = catalog_build(algebra).declared_delta;
        ExponentReport rep = exponent_report(
            a, max_degree, mode == "full" ? WitnessMode::Full : WitnessMode::Template, declared);
        return exponent_json(a, rep);
      },
      py::arg("algebra"), py::arg("max_degree") = 4, py::arg("mode") = "template",
      "Exponent report as a JSON string");

  m.def(
      "classify_poly",
      [](const std::string& algebra, const std::string& poly) {
        GradedAlgebra a = resolve(algebra);
        EnvelopeContext ctx(a);
        GradedPoly f = parse_poly(poly, LabelMap{a.group, {}});
        return std::string(central_class_name(classify_poly(ctx, f)));
      },
      py::arg("algebra"), py::arg("poly"),
      "'identity', 'proper-central' or 'not-central'");

  m.def(
      "verify_suite_json",
      [](const std::string& suite, int max_degree) {
        return suite_json(run_suite(suite, max_degree, 0, 1));
      },
      py::arg("suite"), py::arg("max_degree") = 3, "Run a verification suite");

  m.def("suite_names", [] { return suite_names(); });
}
